"""Seed mutation with principal coefficients and bounded variable enumeration.

A seed is an extended 2n x n integer matrix together with the current
cluster of n Laurent polynomials.  The top block is the skew-symmetric
incidence matrix of the quiver; the bottom block tracks coefficients and
starts at minus the identity, which is the column block of the framed
quiver's incidence matrix [[B, I], [-I, 0]].  With that convention the
exchange relation reproduces cluster characters on the nose (mutating the
initial seed at a sink k gives (prod_{i->k} x_i + y_k)/x_k).

Mutation at k:

* matrix: b'_{ij} = -b_{ij} when i = k or j = k, else
  b_{ij} + sgn(b_{ik}) * max(b_{ik} b_{kj}, 0);
* cluster: x_k' = (M+ + M-)/x_k with
  M+ = prod_i x_i^{[b_ik]+} * prod_j y_j^{[c_jk]+} and M- the same with
  signs flipped; the division must be exact (Laurent phenomenon), and a
  remainder signals an implementation bug, never expected input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .character import CharacterContext, builtin_reps, cluster_character
from .cheb import first_kind, kind_table, second_kind
from .poly import ExactDivisionError, LaurentPoly, exact_div
from .quiver import Quiver, QuiverError


class LaurentPhenomenonError(Exception):
    """Exchange division left a remainder; indicates an internal bug."""


ExtendedMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Seed:
    """Immutable mutation state: extended 2n x n matrix, cluster, history."""

    matrix: ExtendedMatrix
    cluster: tuple[LaurentPoly, ...]
    ctx: CharacterContext = field(compare=False, repr=False)
    history: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.cluster)

    def key(self) -> tuple:
        """Canonical identity for seed deduplication."""
        return (self.matrix, tuple(p.terms for p in self.cluster))


def initial_seed(quiver: Quiver, ctx: CharacterContext) -> Seed:
    """Principal-coefficient seed: matrix [B(Q); -I], cluster (x_0..x_{n-1})."""
    if quiver != ctx.quiver:
        raise QuiverError("quiver and context disagree")
    n = quiver.n
    b = quiver.incidence_matrix()
    rows = [tuple(row) for row in b]
    rows += [tuple(-1 if j == i else 0 for j in range(n)) for i in range(n)]
    cluster = tuple(ctx.x(v) for v in range(n))
    return Seed(tuple(rows), cluster, ctx)


def _mutate_matrix(matrix: ExtendedMatrix, k: int, n: int) -> ExtendedMatrix:
    new = [list(row) for row in matrix]
    for i in range(2 * n):
        for j in range(n):
            if i == k or j == k:
                new[i][j] = -matrix[i][j]
            else:
                b_ik = matrix[i][k]
                b_kj = matrix[k][j]
                if b_ik > 0 and b_kj > 0:
                    new[i][j] = matrix[i][j] + b_ik * b_kj
                elif b_ik < 0 and b_kj < 0:
                    new[i][j] = matrix[i][j] - b_ik * b_kj
    return tuple(tuple(r) for r in new)


def mutate(seed: Seed, k: int) -> Seed:
    """Mutation in direction k; an involution on (matrix, cluster)."""
    n = seed.n
    ctx = seed.ctx
    if not 0 <= k < n:
        raise IndexError(f"mutation direction {k} out of range for rank {n}")
    pos = ctx.one()
    neg = ctx.one()
    for i in range(n):
        b = seed.matrix[i][k]
        if b > 0:
            pos = pos * seed.cluster[i] ** b
        elif b < 0:
            neg = neg * seed.cluster[i] ** (-b)
    for j in range(n):
        c = seed.matrix[n + j][k]
        if c > 0:
            pos = pos * ctx.y(j, c)
        elif c < 0:
            neg = neg * ctx.y(j, -c)
    try:
        new_var = exact_div(pos + neg, seed.cluster[k])
    except ExactDivisionError as exc:
        raise LaurentPhenomenonError(
            f"exchange at {k} did not divide exactly: {exc}"
        ) from exc
    cluster = list(seed.cluster)
    cluster[k] = new_var
    return Seed(_mutate_matrix(seed.matrix, k, n), tuple(cluster), ctx,
                seed.history + (k,))


def mutate_sequence(seed: Seed, ks) -> Seed:
    for k in ks:
        seed = mutate(seed, k)
    return seed


def enumerate_seeds(quiver: Quiver, ctx: CharacterContext, depth: int) -> list[Seed]:
    """Breadth-first mutation closure to the given depth, deduplicated."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    start = initial_seed(quiver, ctx)
    seen = {start.key()}
    out = [start]
    frontier = deque([(start, 0)])
    while frontier:
        seed, dist = frontier.popleft()
        if dist == depth:
            continue
        for k in range(seed.n):
            child = mutate(seed, k)
            key = child.key()
            if key not in seen:
                seen.add(key)
                out.append(child)
                frontier.append((child, dist + 1))
    return out


def enumerate_variables(quiver: Quiver, ctx: CharacterContext, depth: int = 8) -> set[LaurentPoly]:
    """All cluster variables reachable within ``depth`` mutations."""
    variables: set[LaurentPoly] = set()
    for seed in enumerate_seeds(quiver, ctx, depth):
        variables.update(seed.cluster)
    return variables


# ------------------------------------------------------------------ basis families


def basis_family(which: str, kind: str, n_max: int = 6, k_max: int = 3,
                 ctx: CharacterContext | None = None) -> list[LaurentPoly]:
    """Non-cluster-monomial part of the named basis family.

    ``which`` is ``"kronecker"`` or ``"a21"``; ``kind`` picks the
    polynomial flavour: ``"C"`` uses the second kind, ``"B"`` the first
    kind (the canonically positive one).  Every element is S_n (or F_n)
    with q sent to the coefficient monomial of the minimal imaginary root
    and x to the homogeneous quasi-simple character; for the three-vertex
    quiver the elements are additionally multiplied by powers of the
    exceptional quasi-simple characters.  Raises if any element fails to
    be Laurent in x with coefficients in Z[y].
    """
    if kind not in ("C", "B"):
        raise ValueError("kind must be 'C' or 'B'")
    reps = builtin_reps()
    if which == "kronecker":
        base_entry = reps["kronecker.Mlambda"]
        extras_names: list[str] = []
    elif which == "a21":
        base_entry = reps["a21.Mlambda"]
        extras_names = ["a21.R0", "a21.R1"]
    else:
        raise ValueError(f"unknown family base {which!r}")
    if ctx is None:
        ctx = CharacterContext(base_entry.rep.quiver)
    u = cluster_character(base_entry.rep, ctx)
    delta = base_entry.rep.dim
    q_image = ctx.y_power(delta)
    table = kind_table()
    gen = second_kind if kind == "C" else first_kind
    extras = [ctx.one()]
    for name in extras_names:
        w = cluster_character(reps[name].rep, ctx)
        extras.extend(w ** k for k in range(1, k_max + 1))
    out: list[LaurentPoly] = []
    for n in range(1, n_max + 1):
        core = gen(n, table).substitute(
            {table.index("q"): q_image, table.index("x"): u}
        )
        for extra in extras:
            element = core * extra
            if _has_negative_y(element, ctx):
                raise LaurentPhenomenonError(
                    f"basis element {which}/{kind}[n={n}] left Z[y][x^+-1]"
                )
            out.append(element)
    return out


def _has_negative_y(p: LaurentPoly, ctx: CharacterContext) -> bool:
    y_indices = {ctx.table.index(f"y{v}") for v in ctx.quiver.labels}
    for _, mono in p.terms:
        for idx, exp in mono:
            if idx in y_indices and exp < 0:
                return True
    return False
