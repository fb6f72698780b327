"""Quantized Chebyshev polynomial families and their identity checks.

Four families over exact integer coefficients:

* infinite rank  P_n(q_i..q_{i+n-1}, t_i..t_{i+n-1}), generated by the
  division-free three-term recurrence
  ``P_{n+1} = t_{i+n} P_n - q_{i+n} P_{n-1}``, P_0 = 1, P_1 = t_i;
* rank p         P_{n,p}, the same recurrence with indices reduced mod p;
* first kind     F_n in {q, x}: F_0 = 1, F_1 = x, F_2 = x^2 - 2q, then
  ``F_{n+1} = x F_n - q F_{n-1}``;
* second kind    S_n in {q, x}: rank 1 up to renaming, S_2 = x^2 - q.

The two-parameter product identity
``x_{i,n} x_{i+1,n} = x_{i,n+1} x_{i+1,n-1} + q_{i+1}...q_{i+n}``
defines the family; here it is a checked consequence, never the generator
(its raw form needs division outside the polynomial ring).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import LaurentPoly, VarTable, det


def _idx_name(prefix: str, j: int) -> str:
    # negative indices spell the sign out so names stay parseable
    return f"{prefix}{j}" if j >= 0 else f"{prefix}m{-j}"


def q_name(j: int) -> str:
    return _idx_name("q", j)


def t_name(j: int) -> str:
    return _idx_name("t", j)


def infinite_table(lo: int, hi: int) -> VarTable:
    """Table with q_lo..q_hi then t_lo..t_hi (coefficient names first)."""
    names = [q_name(j) for j in range(lo, hi + 1)]
    names += [t_name(j) for j in range(lo, hi + 1)]
    return VarTable(names)


def infinite_rank(n: int, i: int = 0, table: VarTable | None = None) -> LaurentPoly:
    """n-th quantized Chebyshev polynomial of infinite rank with base index i.

    Honest polynomial in q_{i+1}..q_{i+n-1} and t_i..t_{i+n-1}; any
    integer base index is allowed.  Variables are registered on demand.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if table is None:
        table = infinite_table(min(i, i + n - 1), max(i, i + n - 1))
    for j in range(i, i + n):
        table.add(q_name(j))
        table.add(t_name(j))
    prev = LaurentPoly.const(table, 1)
    if n == 0:
        return prev
    cur = LaurentPoly.var(table, t_name(i))
    for k in range(1, n):
        t_k = LaurentPoly.var(table, t_name(i + k))
        q_k = LaurentPoly.var(table, q_name(i + k))
        prev, cur = cur, t_k * cur - q_k * prev
    return cur


def infinite_rank_det(n: int, i: int = 0, table: VarTable | None = None) -> LaurentPoly:
    """Same polynomial computed through the tridiagonal determinant.

    The matrix has diagonal t_{i+n-1}..t_i, superdiagonal 1 and
    subdiagonal q_{i+n-1}..q_{i+1}; an independent route to
    :func:`infinite_rank`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if table is None:
        table = infinite_table(min(i, i + n - 1), max(i, i + n - 1))
    for j in range(i, i + n):
        table.add(q_name(j))
        table.add(t_name(j))
    if n == 0:
        return LaurentPoly.const(table, 1)
    zero = LaurentPoly.zero(table)
    one = LaurentPoly.const(table, 1)
    rows = []
    for r in range(n):
        row = [zero] * n
        row[r] = LaurentPoly.var(table, t_name(i + n - 1 - r))
        if r + 1 < n:
            row[r + 1] = one
        if r > 0:
            row[r - 1] = LaurentPoly.var(table, q_name(i + n - r))
        rows.append(row)
    return det(rows, table=table)


def rank_table(p: int) -> VarTable:
    return VarTable([q_name(j) for j in range(p)] + [t_name(j) for j in range(p)])


def rank_p(n: int, p: int, table: VarTable | None = None, base: int = 0) -> LaurentPoly:
    """n-th quantized Chebyshev polynomial of rank p >= 1.

    Lives in q_0..q_{p-1}, t_0..t_{p-1}; equals the infinite-rank
    polynomial with every index reduced mod p.  ``base`` rotates the
    starting slot (the polynomial for base index i uses variable
    ``(i + j) mod p`` in slot j).
    """
    if p < 1:
        raise ValueError("rank must be a positive integer (wild components use the infinite-rank family)")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if table is None:
        table = rank_table(p)
    else:
        for j in range(p):
            table.add(q_name(j))
            table.add(t_name(j))
    prev = LaurentPoly.const(table, 1)
    if n == 0:
        return prev
    cur = LaurentPoly.var(table, t_name(base % p))
    for k in range(1, n):
        t_k = LaurentPoly.var(table, t_name((base + k) % p))
        q_k = LaurentPoly.var(table, q_name((base + k) % p))
        prev, cur = cur, t_k * cur - q_k * prev
    return cur


def kind_table() -> VarTable:
    return VarTable(["q", "x"])


def first_kind(n: int, table: VarTable | None = None) -> LaurentPoly:
    """n-th quantized Chebyshev polynomial of the first kind, in {q, x}.

    F_0 = 1, F_1 = x, F_2 = x^2 - 2q; afterwards the shared three-term
    recurrence.  Characterized by F_n(v(t + 1/t)) = v^n (t^n + t^-n) at
    q = v^2.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if table is None:
        table = kind_table()
    else:
        table.add("q")
        table.add("x")
    one = LaurentPoly.const(table, 1)
    if n == 0:
        return one
    x = LaurentPoly.var(table, "x")
    if n == 1:
        return x
    q = LaurentPoly.var(table, "q")
    prev, cur = x, x * x - 2 * q
    for _ in range(2, n):
        prev, cur = cur, x * cur - q * prev
    return cur


def second_kind(n: int, table: VarTable | None = None) -> LaurentPoly:
    """n-th quantized Chebyshev polynomial of the second kind, in {q, x}.

    Rank 1 up to variable renaming: S_2 = x^2 - q, same recurrence as the
    first kind with a different second term.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if table is None:
        table = kind_table()
    else:
        table.add("q")
        table.add("x")
    one = LaurentPoly.const(table, 1)
    if n == 0:
        return one
    x = LaurentPoly.var(table, "x")
    if n == 1:
        return x
    q = LaurentPoly.var(table, "q")
    prev, cur = one, x
    for _ in range(1, n):
        prev, cur = cur, x * cur - q * prev
    return cur


# -------------------------------------------------------------------- reports


@dataclass
class CheckResult:
    """One verified identity: name, plain-text formula, pass/fail."""

    name: str
    identity: str
    ok: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"


@dataclass
class Report:
    """Outcome of a named verification suite."""

    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    divergences: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, identity: str, ok: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, identity, ok, detail))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "identity": c.identity, "status": c.status,
                 **({"detail": c.detail} if c.detail else {})}
                for c in self.checks
            ],
            "divergences": list(self.divergences),
        }


# -------------------------------------------------------------------- identity checks


def _q_run(table: VarTable, i: int, n: int) -> LaurentPoly:
    prod = LaurentPoly.const(table, 1)
    for k in range(1, n + 1):
        prod = prod * LaurentPoly.var(table, q_name(i + k))
    return prod


def check_defining_identity(i_range=range(0, 9), n_range=range(1, 9)) -> Report:
    """Product identity P_n(i) P_n(i+1) - P_{n+1}(i) P_{n-1}(i+1) = q_{i+1}..q_{i+n}."""
    report = Report("recurrence")
    los = min(i_range)
    his = max(i_range) + max(n_range) + 1
    table = infinite_table(los, his)
    for i in i_range:
        for n in n_range:
            lhs = (
                infinite_rank(n, i, table) * infinite_rank(n, i + 1, table)
                - infinite_rank(n + 1, i, table) * infinite_rank(n - 1, i + 1, table)
            )
            ok = lhs == _q_run(table, i, n)
            report.add(
                f"product-identity[i={i},n={n}]",
                "P_n(i)*P_n(i+1) - P_{n+1}(i)*P_{n-1}(i+1) == q_{i+1}*...*q_{i+n}",
                ok,
            )
    return report


def check_three_term(n_max: int = 10, i: int = 0) -> Report:
    """Determinant route satisfies P_{n+1} = t_{i+n} P_n - q_{i+n} P_{n-1}."""
    report = Report("three-term")
    table = infinite_table(i, i + n_max + 1)
    for n in range(1, n_max + 1):
        lhs = infinite_rank_det(n + 1, i, table)
        rhs = (
            LaurentPoly.var(table, t_name(i + n)) * infinite_rank_det(n, i, table)
            - LaurentPoly.var(table, q_name(i + n)) * infinite_rank_det(n - 1, i, table)
        )
        report.add(
            f"three-term[i={i},n={n}]",
            "det_{n+1} == t_{i+n}*det_n - q_{i+n}*det_{n-1}",
            lhs == rhs,
        )
    return report


def check_determinant_agreement(n_max: int = 10, i_range=range(-3, 4)) -> Report:
    """Recurrence and tridiagonal determinant produce identical polynomials."""
    report = Report("determinant")
    lo = min(i_range)
    hi = max(i_range) + n_max
    table = infinite_table(lo, hi)
    for i in i_range:
        for n in range(0, n_max + 1):
            ok = infinite_rank(n, i, table) == infinite_rank_det(n, i, table)
            report.add(
                f"det-vs-recurrence[i={i},n={n}]",
                "recurrence P_n == tridiagonal determinant",
                ok,
            )
    return report


def check_rank_reduction(n_max: int = 8, p_values=(1, 2, 3, 4)) -> Report:
    """rank-p polynomials equal the mod-p reduction of the infinite family.

    Also re-derives each family through the index-reduced three-term
    recurrence and, for p = 1, matches the second-kind family after
    renaming.
    """
    report = Report("rankp")
    for p in p_values:
        table = rank_table(p)
        inf_table = infinite_table(0, n_max)
        assign = {}
        for j in range(0, n_max + 1):
            assign[inf_table.index(q_name(j))] = LaurentPoly.var(table, q_name(j % p))
            assign[inf_table.index(t_name(j))] = LaurentPoly.var(table, t_name(j % p))
        for n in range(0, n_max + 1):
            reduced = infinite_rank(n, 0, inf_table).substitute(assign)
            ok = reduced == rank_p(n, p, table)
            report.add(
                f"pi_p-reduction[p={p},n={n}]",
                "P_{n,p} == P_n with q_j -> q_{j mod p}, t_j -> t_{j mod p}",
                ok,
            )
        for n in range(1, n_max):
            lhs = rank_p(n + 1, p, table)
            rhs = (
                LaurentPoly.var(table, t_name(n % p)) * rank_p(n, p, table)
                - LaurentPoly.var(table, q_name(n % p)) * rank_p(n - 1, p, table)
            )
            report.add(
                f"reduced-three-term[p={p},n={n}]",
                "P_{n+1,p} == t_{n mod p}*P_{n,p} - q_{n mod p}*P_{n-1,p}",
                lhs == rhs,
            )
    kt = kind_table()
    r1 = rank_table(1)
    rename = {r1.index(q_name(0)): LaurentPoly.var(kt, "q"),
              r1.index(t_name(0)): LaurentPoly.var(kt, "x")}
    for n in range(0, n_max + 1):
        ok = rank_p(n, 1, rank_table(1)).substitute(rename) == second_kind(n, kt)
        report.add(
            f"rank1-is-second-kind[n={n}]",
            "P_{n,1}(q,t) == S_n(q,x) up to renaming",
            ok,
        )
    return report


def check_dodgson(i_range=range(0, 9), n_range=range(1, 9), q_to_one: bool = True) -> Report:
    """Dodgson-style condensation for the tridiagonal determinants.

    At q = 1: D_n(i) D_n(i+1) - D_{n+1}(i) D_{n-1}(i+1) = 1.  With generic
    q the right side is the product q_{i+1}..q_{i+n} instead, which the
    report also confirms on a sample to show genuine q-dependence.
    """
    report = Report("dodgson")
    lo = min(i_range)
    hi = max(i_range) + max(n_range) + 1
    table = infinite_table(lo, hi)
    ones = {table.index(q_name(j)): LaurentPoly.const(table, 1) for j in range(lo, hi + 1)}

    def d(n: int, i: int) -> LaurentPoly:
        value = infinite_rank_det(n, i, table)
        return value.substitute(ones) if q_to_one else value

    for i in i_range:
        for n in n_range:
            lhs = d(n, i) * d(n, i + 1) - d(n + 1, i) * d(n - 1, i + 1)
            if q_to_one:
                ok = lhs == LaurentPoly.const(table, 1)
                ident = "D_n(i)*D_n(i+1) - D_{n+1}(i)*D_{n-1}(i+1) == 1 at q=1"
            else:
                ok = lhs == _q_run(table, i, n)
                ident = "D_n(i)*D_n(i+1) - D_{n+1}(i)*D_{n-1}(i+1) == q_{i+1}*...*q_{i+n}"
            report.add(f"dodgson[i={i},n={n}]", ident, ok)
    if q_to_one:
        # generic-q sample: the correction is a genuine q-product, not 1
        i, n = min(i_range), 3
        generic = (
            infinite_rank_det(n, i, table) * infinite_rank_det(n, i + 1, table)
            - infinite_rank_det(n + 1, i, table) * infinite_rank_det(n - 1, i + 1, table)
        )
        report.add(
            f"dodgson-generic-q[i={i},n={n}]",
            "generic-q correction equals q_{i+1}*q_{i+2}*q_{i+3}, not 1",
            generic == _q_run(table, i, n) and generic != LaurentPoly.const(table, 1),
        )
    return report


def check_substitution(n_max: int = 15) -> Report:
    """Closed Laurent forms under x -> v(t + 1/t), q -> v^2.

    F_n goes to v^n (t^n + t^-n); S_n goes to v^n * sum_k t^{n-2k}.
    """
    report = Report("substitution")
    target = VarTable(["nu", "t"])
    nu = LaurentPoly.var(target, "nu")
    t = LaurentPoly.var(target, "t")
    t_inv = LaurentPoly.var(target, "t", -1)
    kt = kind_table()
    image = {kt.index("x"): nu * (t + t_inv), kt.index("q"): nu * nu}
    for n in range(1, n_max + 1):
        f_img = first_kind(n, kt).substitute(image)
        f_expected = (nu ** n) * (t ** n + t_inv ** n)
        report.add(
            f"first-kind-substitution[n={n}]",
            "F_n(v(t+1/t)) == v^n*(t^n + t^-n)",
            f_img == f_expected,
        )
        s_img = second_kind(n, kt).substitute(image)
        s_expected = LaurentPoly.zero(target)
        for k in range(0, n + 1):
            s_expected = s_expected + LaurentPoly.var(target, "t", n - 2 * k)
        s_expected = (nu ** n) * s_expected
        report.add(
            f"second-kind-substitution[n={n}]",
            "S_n(v(t+1/t)) == v^n*sum_{k=0..n} t^{n-2k}",
            s_img == s_expected,
        )
    return report


def check_conversions(n_max: int = 15) -> Report:
    """S_n = sum_k q^k F_{n-2k} and F_n = S_n - q S_{n-2} (negative index -> 0)."""
    report = Report("conversions")
    kt = kind_table()
    q = LaurentPoly.var(kt, "q")
    zero = LaurentPoly.zero(kt)

    def f(n: int) -> LaurentPoly:
        return first_kind(n, kt) if n >= 0 else zero

    def s(n: int) -> LaurentPoly:
        return second_kind(n, kt) if n >= 0 else zero

    for n in range(0, n_max + 1):
        rhs = zero
        for k in range(0, n + 1):
            rhs = rhs + (q ** k) * f(n - 2 * k)
        report.add(
            f"second-as-first[n={n}]",
            "S_n == sum_{k=0..n} q^k * F_{n-2k}",
            s(n) == rhs,
        )
        report.add(
            f"first-as-second[n={n}]",
            "F_n == S_n - q*S_{n-2}",
            f(n) == s(n) - q * s(n - 2),
        )
    return report
