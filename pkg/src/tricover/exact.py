"""Exact integer/rational arithmetic helpers.

Bivariate homogeneous polynomials are stored densely: ``coeffs[i]`` is the
coefficient of ``x**i * y**(degree - i)``.  Matrices hold Python integers and
their rank is computed by fraction-free (Bareiss) elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

# Rationals are Python's Fraction: arbitrary precision, always in lowest terms
# with a positive denominator.
BigRational = Fraction


@dataclass(frozen=True)
class HomogPoly:
    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"negative degree {self.degree}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, degree: int) -> "HomogPoly":
        return cls(degree, (0,) * (degree + 1))

    @classmethod
    def const(cls, c: int = 1) -> "HomogPoly":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, i: int, degree: int, c: int = 1) -> "HomogPoly":
        """``c * x**i * y**(degree - i)``."""
        coeffs = [0] * (degree + 1)
        coeffs[i] = c
        return cls(degree, tuple(coeffs))

    @classmethod
    def linear(cls, a: int, b: int) -> "HomogPoly":
        """``a*x + b*y``."""
        return cls(1, (b, a))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __mul__(self, other: "HomogPoly") -> "HomogPoly":
        return poly_mul(self, other)

    def diff_x(self) -> "HomogPoly":
        if self.degree == 0:
            return HomogPoly.zero(0)
        return HomogPoly(
            self.degree - 1, tuple(i * c for i, c in enumerate(self.coeffs) if i > 0)
        )

    def diff_y(self) -> "HomogPoly":
        if self.degree == 0:
            return HomogPoly.zero(0)
        d = self.degree
        return HomogPoly(d - 1, tuple((d - i) * c for i, c in enumerate(self.coeffs) if i < d))

    def __str__(self) -> str:
        terms = []
        d = self.degree
        for i in reversed(range(d + 1)):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "*".join(
                p for p in (_power("x", i), _power("y", d - i)) if p
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _power(v: str, e: int) -> str:
    if e == 0:
        return ""
    return v if e == 1 else f"{v}^{e}"


def poly_mul(p: HomogPoly, q: HomogPoly) -> HomogPoly:
    out = [0] * (p.degree + q.degree + 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            if b:
                out[i + j] += a * b
    return HomogPoly(p.degree + q.degree, tuple(out))


def poly_product(polys: Iterable[HomogPoly]) -> HomogPoly:
    return reduce(poly_mul, polys, HomogPoly.const(1))


# -- gcd of binary forms ----------------------------------------------------
#
# A nonzero binary form p of degree d factors as y**k * P(x, y) where the
# dehomogenization P(t, 1) has degree d - k.  The gcd of two forms is the
# homogenized univariate gcd times y**min(k_p, k_q).


def _dehomogenize(p: HomogPoly) -> tuple[list[Fraction], int]:
    coeffs = [Fraction(c) for c in p.coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs, p.degree - (len(coeffs) - 1)


def _uni_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    lead = b[-1]
    while len(a) >= len(b):
        factor = a[-1] / lead
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _uni_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _uni_rem(a, b)
    return a


def poly_gcd(p: HomogPoly, q: HomogPoly) -> HomogPoly:
    """Primitive gcd of two binary forms (positive leading coefficient)."""
    if p.is_zero():
        return _primitive(q)
    if q.is_zero():
        return _primitive(p)
    pu, pk = _dehomogenize(p)
    qu, qk = _dehomogenize(q)
    g = _uni_gcd(pu, qu)
    k = min(pk, qk)
    # multiplying by y**k keeps index i and raises the degree by k
    deg = len(g) - 1 + k
    out = g + [Fraction(0)] * k
    den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in out), 1)
    return _primitive(HomogPoly(deg, tuple(int(c * den) for c in out)))


def _primitive(p: HomogPoly) -> HomogPoly:
    content = reduce(gcd, p.coeffs, 0)
    if content == 0:
        return p
    nz = [c for c in p.coeffs if c]
    if nz[-1] < 0:
        content = -content
    return HomogPoly(p.degree, tuple(c // content for c in p.coeffs))


def is_squarefree(p: HomogPoly) -> bool:
    """True iff ``p`` has no repeated linear factor over the algebraic closure.

    Uses gcd(p, dp/dx, dp/dy); by Euler's identity any common factor of the
    three must be a repeated factor of ``p``.  Taking the triple gcd keeps
    factors of ``x`` and ``y`` on an equal footing.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree status")
    g = poly_gcd(poly_gcd(p, p.diff_x()), p.diff_y())
    return g.degree == 0


# -- matrices ---------------------------------------------------------------


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "ExactMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat: list[int] = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def row_list(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        rows = self.row_list()
        return ExactMatrix.from_rows(
            [[rows[i][j] for i in range(self.rows)] for j in range(self.cols)], self.rows
        )


def rank(mat: ExactMatrix) -> int:
    return rank_of_rows(mat.row_list(), mat.cols)


def rank_of_rows(rows: list[list[int]], ncols: int) -> int:
    """Bareiss fraction-free elimination; ``rows`` is consumed."""
    a = [r for r in rows if any(r)]
    if not a or ncols == 0:
        return 0
    nrows = len(a)
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    # exact division is the Bareiss invariant
                    row[j] = (p * row[j] - f * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r
