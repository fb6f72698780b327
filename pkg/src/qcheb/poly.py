"""Exact sparse multivariate Laurent polynomial arithmetic.

Polynomials carry arbitrary-precision integer coefficients (plain Python
ints) and live over a :class:`VarTable`, an append-only registry mapping
variable names to dense indices.  A monomial is a sparse map from variable
index to a nonzero (possibly negative) exponent, stored as a sorted tuple
of ``(index, exponent)`` pairs.  A polynomial is a tuple of
``(coefficient, monomial)`` terms in a fixed total order with no zero
coefficients and no repeated monomials, so two polynomials are equal iff
their term tuples are identical.

Term order: ascending lexicographic comparison of dense exponent vectors
in VarTable order.  Registering coefficient-like variables (q's, y's)
before main variables (t's, x's) therefore prints products of main
variables ahead of their coefficient corrections, e.g. ``t0*t1 - q1``.
The order is a pure function of content and is stable under appending new
variables to the table.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping, Sequence


class PolyError(Exception):
    """Base class for polynomial errors."""


class VarTableMismatchError(PolyError):
    """Operands belong to different variable tables."""


class UnknownVariableError(PolyError):
    """A name is not registered in the variable table."""


class ParseError(PolyError):
    """Malformed polynomial text."""


class NonInvertibleSubstitutionError(PolyError):
    """A negative power of a substitution image that is not a unit monomial."""


class ExactDivisionError(PolyError):
    """Division that was required to be exact left a remainder."""


class VarTable:
    """Append-only registry of distinct variable names.

    Indices are assigned in registration order and never change.
    """

    __slots__ = ("_names", "_index")

    def __init__(self, names: Iterable[str] = ()):
        self._names: list[str] = []
        self._index: dict[str, int] = {}
        for name in names:
            self.add(name)

    def add(self, name: str) -> int:
        """Register ``name`` (idempotent) and return its index."""
        if name in self._index:
            return self._index[name]
        if not name or not _NAME_RE.fullmatch(name):
            raise ValueError(f"invalid variable name: {name!r}")
        idx = len(self._names)
        self._names.append(name)
        self._index[name] = idx
        return idx

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable: {name!r}") from None

    def name(self, idx: int) -> str:
        return self._names[idx]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __repr__(self) -> str:
        return f"VarTable({list(self._names)!r})"


# Variable names accepted by VarTable and the parser.  The apostrophe is
# allowed so framed-quiver contexts can name their doubled vertices.
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")

# A monomial: ((var_index, exponent), ...) sorted by index, exponents nonzero.
Mono = tuple[tuple[int, int], ...]

_ONE_MONO: Mono = ()


def mono_mul(a: Mono, b: Mono) -> Mono:
    """Product of two monomials (exponents add, zeros dropped)."""
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for i, e in b:
        v = out.get(i, 0) + e
        if v:
            out[i] = v
        else:
            del out[i]
    return tuple(sorted(out.items()))


def mono_inv(a: Mono) -> Mono:
    return tuple((i, -e) for i, e in a)


def mono_degree(a: Mono) -> int:
    return sum(e for _, e in a)


def _mono_key(a: Mono, width: int) -> tuple[int, ...]:
    vec = [0] * width
    for i, e in a:
        vec[i] = e
    return tuple(vec)


class LaurentPoly:
    """Canonical sparse Laurent polynomial over a :class:`VarTable`.

    Immutable; all arithmetic returns fresh canonical instances.  Supports
    ``+ - * **`` with other polynomials over the same table and with plain
    ints.
    """

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Iterable[tuple[int, Mono]]):
        self.table = table
        self.terms: tuple[tuple[int, Mono], ...] = _canonical(table, terms)

    # ---------------------------------------------------------------- constructors

    @classmethod
    def zero(cls, table: VarTable) -> "LaurentPoly":
        return cls(table, ())

    @classmethod
    def const(cls, table: VarTable, c: int) -> "LaurentPoly":
        return cls(table, ((int(c), _ONE_MONO),)) if c else cls(table, ())

    @classmethod
    def var(cls, table: VarTable, name: str, power: int = 1) -> "LaurentPoly":
        idx = table.index(name)
        if power == 0:
            return cls.const(table, 1)
        return cls(table, ((1, ((idx, power),)),))

    @classmethod
    def term(cls, table: VarTable, coeff: int, exponents: Mapping[str, int]) -> "LaurentPoly":
        mono = tuple(sorted((table.index(n), e) for n, e in exponents.items() if e != 0))
        return cls(table, ((int(coeff), mono),))

    # ---------------------------------------------------------------- predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == ((1, _ONE_MONO),)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit_monomial(self) -> bool:
        """True for +-(single monomial), the invertible elements of the ring."""
        return len(self.terms) == 1 and self.terms[0][0] in (1, -1)

    def min_exponent(self, name: str) -> int:
        """Smallest exponent of ``name`` over all terms (0 if absent everywhere)."""
        idx = self.table.index(name)
        lo = 0
        for _, mono in self.terms:
            e = dict(mono).get(idx, 0)
            if e < lo:
                lo = e
        return lo

    # ---------------------------------------------------------------- arithmetic

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if other.table is not self.table and other.table.names != self.table.names:
                raise VarTableMismatchError("operands use different variable tables")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.table, other)
        return None

    def __add__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[Mono, int] = {m: c for c, m in self.terms}
        for c, m in o.terms:
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return LaurentPoly(self.table, ((c, m) for m, c in acc.items()))

    def __radd__(self, other) -> "LaurentPoly":
        return self.__add__(other)

    def __neg__(self) -> "LaurentPoly":
        p = LaurentPoly.__new__(LaurentPoly)
        p.table = self.table
        p.terms = tuple((-c, m) for c, m in self.terms)
        return p

    def __sub__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__add__(-self)

    def __mul__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return LaurentPoly.zero(self.table)
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict[Mono, int] = {}
        for cb, mb in b:
            for ca, ma in a:
                m = mono_mul(ma, mb)
                v = acc.get(m, 0) + ca * cb
                if v:
                    acc[m] = v
                else:
                    del acc[m]
        return LaurentPoly(self.table, ((c, m) for m, c in acc.items()))

    def __rmul__(self, other) -> "LaurentPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_unit_monomial():
                raise NonInvertibleSubstitutionError(
                    "negative power of a non-invertible polynomial"
                )
            c, m = self.terms[0]
            base = LaurentPoly(self.table, ((c, mono_inv(m)),))
            return base ** (-n)
        result = LaurentPoly.const(self.table, 1)
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    # ---------------------------------------------------------------- equality

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(self.table, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.table is not self.table and other.table.names != self.table.names:
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # ---------------------------------------------------------------- substitution

    def substitute(self, assignment: Mapping[int | str, "LaurentPoly | int"]) -> "LaurentPoly":
        """Image under the ring homomorphism extending ``assignment``.

        Keys are variable names or indices of this polynomial's table.
        Unassigned variables map to themselves.  Exact, no truncation.  A
        variable occurring with a negative exponent must be sent to an
        invertible image (a unit monomial, possibly after inversion);
        otherwise :class:`NonInvertibleSubstitutionError` is raised.

        Images may live over a different table, in which case every
        variable that occurs in this polynomial must be assigned and all
        images must share that target table.
        """
        images: dict[int, LaurentPoly] = {}
        target = self.table
        cross = False
        for key, val in assignment.items():
            idx = self.table.index(key) if isinstance(key, str) else int(key)
            if isinstance(val, int):
                val = LaurentPoly.const(self.table, val)
            if val.table is not self.table and val.table.names != self.table.names:
                if not cross:
                    target, cross = val.table, True
                elif val.table is not target and val.table.names != target.names:
                    raise VarTableMismatchError("substitution images use mixed tables")
            images[idx] = val
        if cross:
            for idx, val in images.items():
                if val.table is not target:
                    uses_vars = any(mono for _, mono in val.terms)
                    if uses_vars and val.table.names != target.names:
                        raise VarTableMismatchError("substitution images use mixed tables")
                    images[idx] = LaurentPoly(target, val.terms)
            used = {i for _, mono in self.terms for i, _ in mono}
            missing = used - set(images)
            if missing:
                names = ", ".join(sorted(self.table.name(i) for i in missing))
                raise VarTableMismatchError(
                    f"cross-table substitution must assign every variable (missing: {names})"
                )
        one = LaurentPoly.const(target, 1)
        out = LaurentPoly.zero(target)
        pow_cache: dict[tuple[int, int], LaurentPoly] = {}
        for coeff, mono in self.terms:
            acc = LaurentPoly.const(target, coeff)
            for idx, exp in mono:
                img = images.get(idx)
                if img is None:
                    acc = acc * LaurentPoly(target, ((1, ((idx, exp),)),))
                    continue
                key = (idx, exp)
                p = pow_cache.get(key)
                if p is None:
                    p = img ** exp if img != one else one
                    pow_cache[key] = p
                acc = acc * p
            out = out + acc
        return out


def _canonical(table: VarTable, terms: Iterable[tuple[int, Mono]]) -> tuple[tuple[int, Mono], ...]:
    merged: dict[Mono, int] = {}
    for c, m in terms:
        if c == 0:
            continue
        v = merged.get(m, 0) + c
        if v:
            merged[m] = v
        else:
            del merged[m]
    width = len(table)
    order = sorted(merged, key=lambda m: _mono_key(m, width))
    return tuple((merged[m], m) for m in order)


# -------------------------------------------------------------------- formatting


def format_mono(table: VarTable, mono: Mono) -> str:
    if not mono:
        return "1"
    parts = []
    for idx, exp in mono:
        name = table.name(idx)
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Render ``p`` canonically; ``parse(format_poly(p)) == p``."""
    if not p.terms:
        return "0"
    chunks: list[str] = []
    for pos, (coeff, mono) in enumerate(p.terms):
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = format_mono(p.table, mono)
        else:
            body = f"{mag}*{format_mono(p.table, mono)}"
        if pos == 0:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)


# -------------------------------------------------------------------- parsing


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"unexpected character at position {pos}: {text[pos]!r}")
            break
        if m.lastgroup == "int":
            tokens.append(("int", m.group("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]], table: VarTable):
        self.tokens = tokens
        self.pos = 0
        self.table = table

    def peek(self) -> tuple[str, str]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> LaurentPoly:
        kind, val = self.peek()
        sign = 1
        while kind == "op" and val in "+-":
            self.take()
            if val == "-":
                sign = -sign
            kind, val = self.peek()
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self) -> LaurentPoly:
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> LaurentPoly:
        base = self.primary()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            exp = self.exponent()
            try:
                return base ** exp
            except NonInvertibleSubstitutionError:
                raise ParseError("negative power of a non-monomial expression") from None
        return base

    def exponent(self) -> int:
        kind, val = self.take()
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            kind, val = self.take()
        if kind != "int":
            raise ParseError("expected integer exponent after '^'")
        return sign * int(val)

    def primary(self) -> LaurentPoly:
        kind, val = self.take()
        if kind == "int":
            return LaurentPoly.const(self.table, int(val))
        if kind == "name":
            return LaurentPoly.var(self.table, val)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val = self.take()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'")
            return inner
        if kind == "op" and val == "-":
            return -self.primary()
        if kind == "op" and val == "+":
            return self.primary()
        raise ParseError(f"unexpected token {val!r}")


def parse(text: str, table: VarTable) -> LaurentPoly:
    """Parse polynomial text over ``table``.

    Grammar: signed integer coefficients, ``*`` products, ``^`` with
    integer (possibly negative) exponents, registered variable names,
    parentheses.
    """
    parser = _Parser(_tokenize(text), table)
    result = parser.expr()
    kind, val = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input at token {val!r}")
    return result


# -------------------------------------------------------------------- JSON


def to_json(p: LaurentPoly) -> dict:
    """JSON document for ``p``; coefficients as decimal strings."""
    return {
        "vars": list(p.table.names),
        "terms": [
            {"c": str(c), "e": {str(i): e for i, e in mono}} for c, mono in p.terms
        ],
    }


def from_json(doc: dict) -> LaurentPoly:
    """Rebuild a polynomial from :func:`to_json` output (bit-exact)."""
    table = VarTable(doc["vars"])
    terms = []
    for item in doc["terms"]:
        mono = tuple(sorted((int(i), int(e)) for i, e in item["e"].items()))
        for i, e in mono:
            if not 0 <= i < len(table):
                raise ParseError(f"variable index {i} out of range")
            if e == 0:
                raise ParseError("zero exponent in stored monomial")
        terms.append((int(item["c"]), mono))
    return LaurentPoly(table, terms)


def dumps(p: LaurentPoly) -> str:
    return json.dumps(to_json(p), separators=(", ", ": "))


# -------------------------------------------------------------------- division


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient a/b when b divides a in the Laurent ring; else raises.

    Laurent monomial content is stripped from both operands first, after
    which ordinary leading-term elimination runs on honest polynomials.
    """
    if b.is_zero():
        raise ExactDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.table)
    if b.table is not a.table and b.table.names != a.table.names:
        raise VarTableMismatchError("operands use different variable tables")
    shift_a, ar = _strip_content(a)
    shift_b, br = _strip_content(b)
    # leading term = last term in canonical (ascending) order
    q_acc: dict[Mono, int] = {}
    rem = dict(ar)
    width = len(a.table)
    lt_b = max(br, key=lambda m: _mono_key(m, width))
    lc_b = br[lt_b]
    while rem:
        lt_r = max(rem, key=lambda m: _mono_key(m, width))
        lc_r = rem[lt_r]
        qc, residue = divmod(lc_r, lc_b)
        if residue:
            raise ExactDivisionError("inexact coefficient quotient")
        diff = dict(lt_r)
        for i, e in lt_b:
            v = diff.get(i, 0) - e
            if v < 0:
                raise ExactDivisionError("leading monomial not divisible")
            if v:
                diff[i] = v
            else:
                diff.pop(i, None)
        qm = tuple(sorted(diff.items()))
        q_acc[qm] = qc
        for c, m in ((c, m) for m, c in br.items()):
            key = mono_mul(m, qm)
            v = rem.get(key, 0) - qc * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    shift = mono_mul(shift_a, mono_inv(shift_b))
    return LaurentPoly(a.table, ((c, mono_mul(m, shift)) for m, c in q_acc.items()))


def _strip_content(p: LaurentPoly) -> tuple[Mono, dict[Mono, int]]:
    """Factor p = x^shift * honest_poly; returns (shift, honest terms).

    The shift is the componentwise minimum exponent vector, taking a
    variable's minimum as 0 when some term omits it.  The stripped part is
    an honest polynomial with per-variable minimum exponent 0.
    """
    lows: dict[int, int] = {}
    seen_counts: dict[int, int] = {}
    for _, mono in p.terms:
        for i, e in mono:
            seen_counts[i] = seen_counts.get(i, 0) + 1
            lo = lows.get(i)
            if lo is None or e < lo:
                lows[i] = e
    nterms = len(p.terms)
    shift = tuple(
        sorted(
            (i, e)
            for i, e in lows.items()
            if e != 0 and (e < 0 or seen_counts[i] == nterms)
        )
    )
    inv = mono_inv(shift)
    return shift, {mono_mul(m, inv): c for c, m in p.terms}


# -------------------------------------------------------------------- determinants


def det(matrix: Sequence[Sequence[LaurentPoly]], *, table: VarTable | None = None) -> LaurentPoly:
    """Exact determinant of a square matrix of polynomials.

    The empty 0x0 matrix has determinant 1 (``table`` must then be given).
    Tridiagonal matrices take a linear three-term recurrence; everything
    else falls back to fraction-free Bareiss elimination, which stays
    inside the ring.
    """
    n = len(matrix)
    if n == 0:
        if table is None:
            raise ValueError("empty determinant needs an explicit table")
        return LaurentPoly.const(table, 1)
    for row in matrix:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    t = matrix[0][0].table
    if n == 1:
        return matrix[0][0]
    if _is_tridiagonal(matrix):
        return _det_tridiagonal(matrix, t)
    return _det_bareiss(matrix, t)


def _is_tridiagonal(matrix: Sequence[Sequence[LaurentPoly]]) -> bool:
    n = len(matrix)
    return all(
        matrix[i][j].is_zero()
        for i in range(n)
        for j in range(n)
        if abs(i - j) > 1
    )


def _det_tridiagonal(matrix, table: VarTable) -> LaurentPoly:
    n = len(matrix)
    prev2 = LaurentPoly.const(table, 1)
    prev1 = matrix[0][0]
    for k in range(1, n):
        cur = matrix[k][k] * prev1 - matrix[k][k - 1] * matrix[k - 1][k] * prev2
        prev2, prev1 = prev1, cur
    return prev1


def _det_bareiss(matrix, table: VarTable) -> LaurentPoly:
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = LaurentPoly.const(table, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if pivot_row is None:
                return LaurentPoly.zero(table)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = LaurentPoly.zero(table)
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result
