"""Acyclic quivers, finite-dimensional representations, and the
submodule-grassmannian Euler-characteristic oracle.

A representation carries integer matrices (entries read over the
rationals, reducible mod any prime).  ``subrep_count`` enumerates
subrepresentations over a prime field exhaustively; ``grassmannian_euler``
counts points over enough primes to pin down the counting polynomial by
Lagrange interpolation and evaluates it at 1.  The oracle deliberately
refuses inputs outside the class it is built for (per-vertex dimension at
most 3, primes at most 13) instead of risking runtime blowups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]
DimVector = tuple[int, ...]


class QuiverError(Exception):
    """Structural problem with a quiver or representation."""


class OracleLimitError(Exception):
    """Input outside the supported enumeration bounds; the oracle refuses."""


class NoCountingPolynomialError(Exception):
    """Point counts did not interpolate to an integer polynomial."""


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
_MAX_VERTEX_DIM = 3


class Quiver:
    """Finite acyclic directed multigraph with labelled vertices."""

    __slots__ = ("labels", "arrows", "_topo")

    def __init__(self, labels: Sequence[str], arrows: Iterable[tuple[int, int]]):
        self.labels = tuple(str(v) for v in labels)
        if len(set(self.labels)) != len(self.labels):
            raise QuiverError("vertex labels must be distinct")
        self.arrows = tuple((int(s), int(t)) for s, t in arrows)
        n = len(self.labels)
        for s, t in self.arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise QuiverError(f"arrow ({s},{t}) out of range")
        self._topo = self._toposort()

    @property
    def n(self) -> int:
        return len(self.labels)

    def _toposort(self) -> tuple[int, ...]:
        n = self.n
        indeg = [0] * n
        out: list[list[int]] = [[] for _ in range(n)]
        for s, t in self.arrows:
            indeg[t] += 1
            out[s].append(t)
        order = [v for v in range(n) if indeg[v] == 0]
        seen = 0
        while seen < len(order):
            v = order[seen]
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        if len(order) != n:
            raise QuiverError("quiver has an oriented cycle")
        return tuple(order)

    def incidence_matrix(self) -> list[list[int]]:
        """Skew-symmetric matrix b_ij = #(i->j) - #(j->i)."""
        n = self.n
        b = [[0] * n for _ in range(n)]
        for s, t in self.arrows:
            b[s][t] += 1
            b[t][s] -= 1
        return b

    def framed(self) -> "Quiver":
        """Double the vertex set and add one arrow v -> v' per vertex.

        The copies keep the original order and are labelled with a prime
        suffix; original arrows are preserved.
        """
        labels = list(self.labels) + [f"{v}'" for v in self.labels]
        arrows = list(self.arrows) + [(v, v + self.n) for v in range(self.n)]
        return Quiver(labels, arrows)

    def to_json(self) -> dict:
        return {"vertices": list(self.labels), "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, doc: dict) -> "Quiver":
        return cls(doc["vertices"], [tuple(a) for a in doc["arrows"]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.labels == other.labels and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.labels, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver({list(self.labels)!r}, {list(self.arrows)!r})"


def euler_form(q: Quiver, m: Sequence[int], n: Sequence[int]) -> int:
    """Euler form on dimension vectors of a hereditary path algebra.

    <m, n> = sum_v m_v n_v - sum_{a: s->t} m_s n_t; bilinear, and on
    simples <a_i, a_i> = 1, <a_s, a_t> drops by one per arrow s -> t.
    """
    if len(m) != q.n or len(n) != q.n:
        raise QuiverError("dimension vector length mismatch")
    total = sum(mi * ni for mi, ni in zip(m, n))
    for s, t in q.arrows:
        total -= m[s] * n[t]
    return total


@dataclass(frozen=True)
class Representation:
    """Finite-dimensional representation of a quiver over the integers.

    ``matrices[a]`` is the (dim_target x dim_source) matrix of arrow
    ``a``; matrices into or out of a zero space collapse to the evident
    empty shape.
    """

    quiver: Quiver
    dim: DimVector
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.dim) != self.quiver.n:
            raise QuiverError("dimension vector length mismatch")
        if any(d < 0 for d in self.dim):
            raise QuiverError("negative dimension")
        if len(self.matrices) != len(self.quiver.arrows):
            raise QuiverError("one matrix per arrow required")
        for a, (s, t) in enumerate(self.quiver.arrows):
            mat = self.matrices[a]
            if len(mat) != self.dim[t] or any(len(row) != self.dim[s] for row in mat):
                raise QuiverError(
                    f"arrow {a}: matrix shape {_shape(mat)} != ({self.dim[t]}, {self.dim[s]})"
                )

    @classmethod
    def build(cls, quiver: Quiver, dim: Sequence[int],
              matrices: dict[int, Sequence[Sequence[int]]] | None = None) -> "Representation":
        """Construct with sparse matrix input; omitted arrows are zero maps."""
        dim = tuple(int(d) for d in dim)
        mats: list[Matrix] = []
        matrices = matrices or {}
        for a, (s, t) in enumerate(quiver.arrows):
            if a in matrices:
                mats.append(tuple(tuple(int(x) for x in row) for row in matrices[a]))
            else:
                mats.append(tuple(tuple(0 for _ in range(dim[s])) for _ in range(dim[t])))
        return cls(quiver, dim, tuple(mats))

    def direct_sum(self, other: "Representation") -> "Representation":
        if other.quiver != self.quiver:
            raise QuiverError("direct sum needs a common quiver")
        dim = tuple(a + b for a, b in zip(self.dim, other.dim))
        mats: list[Matrix] = []
        for a, (s, t) in enumerate(self.quiver.arrows):
            left, right = self.matrices[a], other.matrices[a]
            rows: list[tuple[int, ...]] = []
            for r in range(self.dim[t]):
                rows.append(tuple(left[r]) + tuple(0 for _ in range(other.dim[s])))
            for r in range(other.dim[t]):
                rows.append(tuple(0 for _ in range(self.dim[s])) + tuple(right[r]))
            mats.append(tuple(rows))
        return Representation(self.quiver, dim, tuple(mats))

    def embed_framed(self) -> "Representation":
        """Image under the exact embedding into modules of the framed quiver.

        Zero spaces on the doubled vertices, zero maps on the framing
        arrows; original arrows keep their matrices.
        """
        framed = self.quiver.framed()
        dim = tuple(self.dim) + tuple(0 for _ in range(self.quiver.n))
        mats = list(self.matrices)
        for v in range(self.quiver.n):
            mats.append(tuple())  # (0 x dim_v) matrix
        return Representation(framed, dim, tuple(mats))

    def to_json(self) -> dict:
        return {
            "dim": list(self.dim),
            "matrices": {
                str(a): [list(row) for row in mat]
                for a, mat in enumerate(self.matrices)
                if any(x for row in mat for x in row)
            },
        }

    @classmethod
    def from_json(cls, quiver: Quiver, doc: dict) -> "Representation":
        mats = {int(a): rows for a, rows in doc.get("matrices", {}).items()}
        return cls.build(quiver, doc["dim"], mats)


def _shape(mat: Matrix) -> tuple[int, int]:
    return (len(mat), len(mat[0]) if mat else 0)


# ------------------------------------------------------------------ F_p linear algebra


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    rows = [r[:] for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                factor = rows[r][col] % p
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _reduce_vector(vec: list[int], basis: list[list[int]], pivots: list[int], p: int) -> bool:
    """True iff vec lies in the row span of the RREF basis."""
    vec = [x % p for x in vec]
    for row, col in zip(basis, pivots):
        c = vec[col]
        if c:
            vec = [(x - c * y) % p for x, y in zip(vec, row)]
    return not any(vec)


def _subspaces(n: int, k: int, p: int) -> list[tuple[list[list[int]], list[int]]]:
    """All k-dimensional subspaces of F_p^n as (RREF basis rows, pivots)."""
    if k == 0:
        return [([], [])]
    if k > n:
        return []
    out: list[tuple[list[list[int]], list[int]]] = []
    from itertools import combinations

    for pivots in combinations(range(n), k):
        free_positions = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for values in product(range(p), repeat=len(free_positions)):
            rows = [[0] * n for _ in range(k)]
            for r, c in zip(range(k), pivots):
                rows[r][c] = 1
            for (r, c), v in zip(free_positions, values):
                rows[r][c] = v
            out.append((rows, list(pivots)))
    return out


def subrep_count(rep: Representation, e: Sequence[int], prime: int) -> int:
    """Number of subrepresentations of dimension vector ``e`` over F_prime.

    Exhaustive: enumerates subspace tuples (U_v, dim U_v = e_v) and keeps
    those with M(a)(U_s) contained in U_t for every arrow a: s -> t.
    Vectors of ``e`` exceeding the representation's dimensions give an
    empty grassmannian, hence 0.
    """
    if prime not in _SMALL_PRIMES:
        raise OracleLimitError(f"prime {prime} outside supported set {_SMALL_PRIMES}")
    if any(d > _MAX_VERTEX_DIM for d in rep.dim):
        raise OracleLimitError(
            f"per-vertex dimension above {_MAX_VERTEX_DIM} is not supported"
        )
    if len(e) != rep.quiver.n:
        raise QuiverError("dimension vector length mismatch")
    if any(x < 0 for x in e):
        raise QuiverError("negative entry in dimension vector")
    if any(ev > dv for ev, dv in zip(e, rep.dim)):
        return 0

    per_vertex = [_subspaces(rep.dim[v], e[v], prime) for v in range(rep.quiver.n)]
    arrows = [
        (s, t, rep.matrices[a])
        for a, (s, t) in enumerate(rep.quiver.arrows)
        if rep.dim[s] and rep.dim[t]
    ]
    count = 0
    for choice in product(*per_vertex):
        ok = True
        for s, t, mat in arrows:
            basis_s, _ = choice[s]
            basis_t, pivots_t = choice[t]
            for u in basis_s:
                image = [sum(mat[r][c] * u[c] for c in range(len(u))) % prime
                         for r in range(len(mat))]
                if any(image) and not _reduce_vector(image, basis_t, pivots_t, prime):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def grassmannian_euler(rep: Representation, e: Sequence[int]) -> int:
    """Euler characteristic of the submodule grassmannian at ``e``.

    Counts points over d+1 distinct primes, d = sum_v e_v (dim_v - e_v)
    bounding the grassmannian dimension, interpolates the unique
    degree-<=d counting polynomial (which must have integer coefficients)
    and evaluates it at 1.  Valid exactly when the counting-polynomial
    property holds, which covers every representation this package ships.
    """
    e = tuple(int(x) for x in e)
    if any(ev > dv for ev, dv in zip(e, rep.dim)):
        return 0
    d = sum(ev * (dv - ev) for ev, dv in zip(e, rep.dim))
    if d + 1 > len(_SMALL_PRIMES):
        raise OracleLimitError(
            f"needs {d + 1} primes, only {len(_SMALL_PRIMES)} supported"
        )
    primes = _SMALL_PRIMES[: d + 1]
    counts = [subrep_count(rep, e, p) for p in primes]
    coeffs = _interpolate_integer_poly(primes, counts)
    return sum(coeffs)


def _interpolate_integer_poly(xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Coefficients of the unique degree < len(xs) polynomial through the points.

    Exact rational arithmetic; raises if any coefficient is non-integral.
    """
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for k in range(n):
        # Lagrange basis polynomial L_k expanded by repeated convolution
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == k:
                continue
            basis = _poly_mul_linear(basis, -xs[j])
            denom *= xs[k] - xs[j]
        scale = Fraction(ys[k]) / denom
        for i, b in enumerate(basis):
            coeffs[i] += scale * b
    out: list[int] = []
    for c in coeffs:
        if c.denominator != 1:
            raise NoCountingPolynomialError(
                "point counts do not interpolate to an integer polynomial"
            )
        out.append(int(c))
    return out


def _poly_mul_linear(coeffs: list[Fraction], constant: int) -> list[Fraction]:
    """Multiply a coefficient list (ascending) by (x + constant)."""
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i] += c * constant
        out[i + 1] += c
    return out
