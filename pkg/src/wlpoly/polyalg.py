"""Exact sparse polynomials in ``x``, ``alpha`` and ``beta`` over the rationals.

Coefficients are Python ints whenever they are integral and
:class:`fractions.Fraction` otherwise; the two mix freely and the
integral fast path matters because the Laguerre and Hermite families
never leave the integers.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from numbers import Rational
from typing import Iterable, Mapping, Sequence

__all__ = [
    "BigRational",
    "MPoly",
    "PolyMatrix",
    "LinearSolution",
    "NotSquare",
    "DimensionMismatch",
    "InexactDivision",
    "X",
    "ALPHA",
    "BETA",
    "ONE",
    "ZERO",
    "NEG_INF",
    "mpoly_arith",
    "determinant",
    "solve_linear",
    "serialize",
    "parse_mpoly",
    "permutation_sign",
    "permutation_determinant",
]

BigRational = Fraction
NEG_INF = -math.inf

Exp = tuple[int, int, int]
_VARS = ("x", "alpha", "beta")


class NotSquare(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class InexactDivision(ArithmeticError):
    """A division that must be exact left a remainder."""


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"unsupported coefficient {c!r}")


class MPoly:
    """Immutable polynomial in ``(x, alpha, beta)``.

    ``terms`` maps exponent triples to nonzero coefficients. Zero is the
    empty map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, object] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _norm(c)
                if c:
                    clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "MPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def coerce(cls, v) -> "MPoly":
        return v if isinstance(v, MPoly) else cls.const(v)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ring operations

    def __add__(self, other):
        if not isinstance(other, MPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = MPoly.const(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = MPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return self.scale(other)
        out: dict = {}
        get = out.get
        for (a0, a1, a2), ca in self._terms.items():
            for (b0, b1, b2), cb in other._terms.items():
                e = (a0 + b0, a1 + b1, a2 + b2)
                out[e] = get(e, 0) + ca * cb
        return MPoly._raw({e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "MPoly":
        c = _norm(c)
        if not c:
            return ZERO
        return MPoly._raw({e: _norm(v * c) for e, v in self._terms.items()})

    def __truediv__(self, c):
        if isinstance(c, MPoly):
            raise TypeError("division by a polynomial is not supported")
        c = Fraction(c)
        if c == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return self.scale(1 / c)

    def exact_div(self, d: int, integral: bool = True) -> "MPoly":
        """Divide by a nonzero integer.

        With ``integral`` set, every coefficient must be an integer divisible
        by ``d``; anything else raises :class:`InexactDivision`. Otherwise the
        division is carried out over the rationals.
        """
        if d == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        out = {}
        for e, c in self._terms.items():
            if integral:
                if not isinstance(c, int):
                    raise InexactDivision(f"coefficient {c} at {e} is not an integer")
                q, r = divmod(c, d)
                if r:
                    raise InexactDivision(f"coefficient {c} at {e} not divisible by {d}")
                out[e] = q
            else:
                out[e] = _norm(Fraction(c) / d)
        return MPoly._raw(out)

    # structure

    def degree(self, var: int = 0) -> float | int:
        """Degree in the variable with index ``var``; ``NEG_INF`` for zero."""
        if not self._terms:
            return NEG_INF
        return max(e[var] for e in self._terms)

    def degree_x(self):
        return self.degree(0)

    def coeff_x(self, k: int) -> "MPoly":
        """Coefficient of ``x**k`` as a polynomial in alpha, beta."""
        return MPoly._raw({(0, e[1], e[2]): c for e, c in self._terms.items() if e[0] == k})

    def leading_coeff_x(self) -> "MPoly":
        d = self.degree_x()
        return ZERO if d == NEG_INF else self.coeff_x(d)

    def is_monic_x(self, degree: int | None = None) -> bool:
        d = self.degree_x()
        if degree is not None and d != degree:
            return False
        return self.leading_coeff_x() == ONE

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0, 0, 0), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def derivative_x(self) -> "MPoly":
        return MPoly._raw(
            {(e[0] - 1, e[1], e[2]): _norm(c * e[0]) for e, c in self._terms.items() if e[0]}
        )

    def substitute(self, var: str | int, value) -> "MPoly":
        """Compose: replace the variable ``var`` by the polynomial ``value``."""
        idx = _VARS.index(_var_name(var)) if not isinstance(var, int) else var
        value = MPoly.coerce(value)
        grouped: dict[int, dict] = {}
        for e, c in self._terms.items():
            rest = list(e)
            k = rest[idx]
            rest[idx] = 0
            grouped.setdefault(k, {})[tuple(rest)] = c
        out = ZERO
        powers = {0: ONE}
        for k in sorted(grouped):
            if k not in powers:
                powers[k] = value ** k
            out = out + MPoly._raw(grouped[k]) * powers[k]
        return out

    def evaluate(self, x=None, alpha=None, beta=None):
        """Substitute any subset of the variables by rationals or polynomials."""
        p = self
        for name, v in (("x", x), ("alpha", alpha), ("beta", beta)):
            if v is not None:
                p = p.substitute(name, v)
        return p

    def sorted_terms(self) -> list[tuple[Exp, object]]:
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def __repr__(self):
        return f"MPoly({to_human(self)!r})"

    def __str__(self):
        return to_human(self)


def _var_name(v: str) -> str:
    aliases = {"x": "x", "a": "alpha", "alpha": "alpha", "α": "alpha",
               "b": "beta", "beta": "beta", "β": "beta"}
    try:
        return aliases[v]
    except KeyError:
        raise ValueError(f"unknown variable {v!r}") from None


ZERO = MPoly._raw({})
ONE = MPoly._raw({(0, 0, 0): 1})
X = MPoly._raw({(1, 0, 0): 1})
ALPHA = MPoly._raw({(0, 1, 0): 1})
BETA = MPoly._raw({(0, 0, 1): 1})


def mpoly_arith(op: str, a: MPoly, b) -> MPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct sortable items."""
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    index = {v: i for i, v in enumerate(sorted(perm))}
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = index[perm[j]]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(n, m, tuple(MPoly.coerce(v) for r in rows for v in r))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]


_COFACTOR_LIMIT = 5


def determinant(m: PolyMatrix) -> MPoly:
    """Exact determinant; the 0x0 determinant is 1.

    Small matrices use plain cofactor expansion along the first row.
    Larger ones expand row by row with the minors on each column subset
    memoised, which stays division-free (``O(2^n n)`` products).
    """
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix has no determinant")
    n = m.rows
    if n == 0:
        return ONE
    if n <= _COFACTOR_LIMIT:
        return _cofactor(m, 0, tuple(range(n)))
    return _subset_laplace(m)


def _cofactor(m: PolyMatrix, row: int, cols: tuple) -> MPoly:
    if len(cols) == 1:
        return m[row, cols[0]]
    total = ZERO
    for pos, c in enumerate(cols):
        entry = m[row, c]
        if not entry:
            continue
        minor = _cofactor(m, row + 1, cols[:pos] + cols[pos + 1 :])
        term = entry * minor
        total = total - term if pos % 2 else total + term
    return total


def _subset_laplace(m: PolyMatrix) -> MPoly:
    n = m.rows
    # minors[mask]: determinant of the bottom rows restricted to columns in mask
    minors = {1 << c: m[n - 1, c] for c in range(n)}
    for row in range(n - 2, -1, -1):
        size = n - row
        nxt = {}
        for mask in _masks_of_size(n, size):
            cols = [c for c in range(n) if mask >> c & 1]
            total = ZERO
            for pos, c in enumerate(cols):
                entry = m[row, c]
                if not entry:
                    continue
                sub = minors.get(mask & ~(1 << c))
                if not sub:
                    continue
                term = entry * sub
                total = total - term if pos % 2 else total + term
            nxt[mask] = total
        minors = nxt
    return minors[(1 << n) - 1]


def _masks_of_size(n: int, k: int) -> Iterable[int]:
    from itertools import combinations

    for combo in combinations(range(n), k):
        yield sum(1 << c for c in combo)


def permutation_determinant(m: PolyMatrix) -> MPoly:
    """Leibniz formula; only for small matrices and for cross-checking."""
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix has no determinant")
    total = ZERO
    for perm in permutations(range(m.rows)):
        term = MPoly.const(permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term * m[i, j]
            if not term:
                break
        total = total + term
    return total


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`solve_linear`.

    ``status`` is ``"unique"``, ``"underdetermined"`` or ``"infeasible"``.
    For consistent systems ``solution`` is one exact solution (free
    variables set to zero, listed in ``free``). For infeasible systems
    ``certificate`` is a vector ``y`` with ``y A = 0`` and ``y b = residual != 0``.
    """

    status: str
    solution: tuple | None = None
    free: tuple = ()
    certificate: tuple | None = None
    residual: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def solve_linear(A: Sequence[Sequence], b: Sequence) -> LinearSolution:
    """Gauss-Jordan elimination over the rationals with row-operation tracking."""
    rows = len(A)
    if rows != len(b):
        raise DimensionMismatch(f"{rows} rows but {len(b)} right-hand sides")
    cols = len(A[0]) if rows else 0
    if any(len(r) != cols for r in A):
        raise DimensionMismatch("ragged coefficient matrix")

    M = [[Fraction(v) for v in r] for r in A]
    rhs = [Fraction(v) for v in b]
    # track[i] expresses current row i as a combination of the original rows
    track = [[Fraction(int(i == j)) for j in range(rows)] for i in range(rows)]

    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        rhs[r], rhs[p] = rhs[p], rhs[r]
        track[r], track[p] = track[p], track[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        rhs[r] *= inv
        track[r] = [v * inv for v in track[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [u - f * v for u, v in zip(M[i], M[r])]
                rhs[i] -= f * rhs[r]
                track[i] = [u - f * v for u, v in zip(track[i], track[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break

    for i in range(r, rows):
        if rhs[i] != 0:
            return LinearSolution(
                "infeasible", certificate=tuple(track[i]), residual=rhs[i]
            )

    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = rhs[i]
    free = tuple(c for c in range(cols) if c not in pivots)
    status = "unique" if not free else "underdetermined"
    return LinearSolution(status, solution=tuple(x), free=free)


# serialization


def _rat_text(c) -> tuple[str, str]:
    c = Fraction(c)
    return str(c.numerator), str(c.denominator)


def to_json_obj(p: MPoly) -> dict:
    return {
        "terms": [
            {"exp": list(e), "num": _rat_text(c)[0], "den": _rat_text(c)[1]}
            for e, c in p.sorted_terms()
        ]
    }


def from_json_obj(obj: Mapping) -> MPoly:
    terms = {}
    for t in obj["terms"]:
        e = tuple(int(v) for v in t["exp"])
        if len(e) != 3:
            raise ValueError(f"exponent triple expected, got {t['exp']!r}")
        terms[e] = terms.get(e, 0) + Fraction(int(t["num"]), int(t["den"]))
    return MPoly(terms)


_HUMAN_NAMES = {1: "a", 2: "b", 0: "x"}
_LATEX_NAMES = {1: r"\alpha", 2: r"\beta", 0: "x"}


def _monomial(e: Exp, names: Mapping[int, str], mul: str, power: str) -> list[str]:
    factors = []
    for idx in (1, 2, 0):
        k = e[idx]
        if k == 1:
            factors.append(names[idx])
        elif k > 1:
            factors.append(f"{names[idx]}{power}{k}" if power == "^" else f"{names[idx]}^{{{k}}}")
    return factors


def to_human(p: MPoly) -> str:
    if not p:
        return "0"
    out = []
    for e, c in p.sorted_terms():
        c = Fraction(c)
        neg = c < 0
        mag = -c if neg else c
        factors = _monomial(e, _HUMAN_NAMES, "*", "^")
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def to_latex(p: MPoly) -> str:
    if not p:
        return "0"
    out = []
    for e, c in p.sorted_terms():
        c = Fraction(c)
        neg = c < 0
        mag = -c if neg else c
        factors = _monomial(e, _LATEX_NAMES, " ", "latex")
        if mag.denominator != 1:
            coef = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        else:
            coef = str(mag.numerator)
        if mag != 1 or not factors:
            factors.insert(0, coef)
        body = " ".join(factors)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def serialize(p: MPoly, fmt: str = "human") -> str:
    if fmt == "json":
        return json.dumps(to_json_obj(p), separators=(",", ":"))
    if fmt == "human":
        return to_human(p)
    if fmt == "latex":
        return to_latex(p)
    raise ValueError(f"unknown format {fmt!r}")


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_mpoly(text: str) -> MPoly:
    """Inverse of :func:`serialize` for the ``json`` and ``human`` formats."""
    text = text.strip()
    if text.startswith("{"):
        return from_json_obj(json.loads(text))
    if not text:
        raise ValueError("empty polynomial text")
    total: dict = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ValueError(f"missing operator before {body!r}")
        first = False
        coef = Fraction(-1 if sign == "-" else 1)
        exp = [0, 0, 0]
        for factor in body.split("*"):
            factor = factor.strip()
            base, _, power = factor.partition("^")
            base = base.strip()
            k = int(power) if power else 1
            if base in ("x", "a", "b"):
                exp[{"x": 0, "a": 1, "b": 2}[base]] += k
            else:
                coef *= Fraction(base) ** k
        e = tuple(exp)
        total[e] = total.get(e, 0) + coef
        pos = m.end()
    return MPoly(total)
