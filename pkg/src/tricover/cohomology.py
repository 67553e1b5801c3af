"""Line-bundle cohomology on P^1 and on the smooth varieties of minimal degree.

Divisor classes come in two shapes.  On projective space, quadrics and the
Veronese surface the Picard group is generated by the hyperplane class and a
class is ``LineClass(k)``.  On a scroll ``P(O(e_1) + ... + O(e_m))`` a class is
``ScrollClass(a, b) = aH + bF``.

For the Veronese surface ``LineClass(k)`` means ``O_{P^2}(2k)``; ``k`` may be a
half-integer there so that the canonical class ``O_{P^2}(-3)`` is expressible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Union


def h_p1(d: int, i: int) -> int:
    if i == 0:
        return max(0, d + 1)
    if i == 1:
        return max(0, -d - 1)
    raise ValueError(f"P^1 has cohomology only in degrees 0 and 1, got i={i}")


# -- targets ----------------------------------------------------------------


@dataclass(frozen=True)
class ProjSpace:
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"ProjSpace needs m >= 2, got {self.m}")

    @property
    def dim(self) -> int:
        return self.m

    @property
    def degree(self) -> int:
        return 1

    def __str__(self):
        return f"P^{self.m}"


@dataclass(frozen=True)
class Quadric:
    """Smooth quadric hypersurface of dimension ``m`` in ``P^(m+1)``."""

    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"Quadric needs m >= 2, got {self.m}")

    @property
    def dim(self) -> int:
        return self.m

    @property
    def degree(self) -> int:
        return 2

    def __str__(self):
        return f"Q^{self.m}"


@dataclass(frozen=True)
class Scroll:
    """Smooth rational normal scroll ``S(e_1, ..., e_m)``."""

    e: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(sorted(int(x) for x in self.e)))
        if len(self.e) < 2:
            raise ValueError(f"Scroll needs at least two twists, got {self.e}")
        if any(x < 1 for x in self.e):
            raise ValueError(f"smooth scroll needs every twist >= 1, got {self.e}")

    @property
    def dim(self) -> int:
        return len(self.e)

    @property
    def degree(self) -> int:
        return sum(self.e)

    def __str__(self):
        return "S(" + ",".join(map(str, self.e)) + ")"


@dataclass(frozen=True)
class Veronese:
    """The Veronese surface of degree 4 in ``P^5``."""

    @property
    def dim(self) -> int:
        return 2

    @property
    def degree(self) -> int:
        return 4

    def __str__(self):
        return "Veronese"


TargetSpec = Union[ProjSpace, Quadric, Scroll, Veronese]


@dataclass(frozen=True)
class LineClass:
    k: Union[int, Fraction]

    def __add__(self, other: "LineClass") -> "LineClass":
        return LineClass(_norm(self.k + other.k))

    def __sub__(self, other: "LineClass") -> "LineClass":
        return LineClass(_norm(self.k - other.k))

    def __neg__(self) -> "LineClass":
        return LineClass(-self.k)

    def __rmul__(self, c: int) -> "LineClass":
        return LineClass(_norm(c * self.k))

    def is_integral(self) -> bool:
        return isinstance(self.k, int)

    def to_json(self) -> dict:
        return {"O": self.k if self.is_integral() else str(self.k)}

    def __str__(self):
        return f"O({self.k})"


@dataclass(frozen=True)
class ScrollClass:
    a: int
    b: int

    def __add__(self, other: "ScrollClass") -> "ScrollClass":
        return ScrollClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "ScrollClass") -> "ScrollClass":
        return ScrollClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "ScrollClass":
        return ScrollClass(-self.a, -self.b)

    def __rmul__(self, c: int) -> "ScrollClass":
        return ScrollClass(c * self.a, c * self.b)

    def is_integral(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {"H": self.a, "F": self.b}

    def __str__(self):
        parts = []
        for coef, sym in ((self.a, "H"), (self.b, "F")):
            if coef == 0:
                continue
            c = "" if coef == 1 else "-" if coef == -1 else str(coef)
            parts.append(f"{c}{sym}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


DivisorClass = Union[LineClass, ScrollClass]


def _norm(k):
    if isinstance(k, Fraction) and k.denominator == 1:
        return int(k)
    return k


def hyperplane(Y: TargetSpec) -> DivisorClass:
    return ScrollClass(1, 0) if isinstance(Y, Scroll) else LineClass(1)


def fiber(Y: Scroll) -> ScrollClass:
    return ScrollClass(0, 1)


def canonical_class(Y: TargetSpec) -> DivisorClass:
    if isinstance(Y, ProjSpace):
        return LineClass(-Y.m - 1)
    if isinstance(Y, Quadric):
        return LineClass(-Y.m)
    if isinstance(Y, Scroll):
        return ScrollClass(-Y.dim, Y.degree - 2)
    if isinstance(Y, Veronese):
        # O_{P^2}(-3) is -3/2 times the hyperplane class O_{P^2}(2)
        return LineClass(Fraction(-3, 2))
    raise TypeError(f"unknown target {Y!r}")


# -- cohomology -------------------------------------------------------------


def _h_proj(n: int, k: int, i: int) -> int:
    """h^i(P^n, O(k))."""
    if i == 0:
        return comb(n + k, n) if k >= 0 else 0
    if i == n:
        return _h_proj(n, -k - n - 1, 0)
    return 0


def _h_quadric(m: int, k: int, i: int) -> int:
    # 0 -> O_P(k-2) -> O_P(k) -> O_Q(k) -> 0 on P = P^(m+1); the middle
    # cohomology of P vanishes, so only h^0 and h^m of Q survive.
    n = m + 1
    if i == 0:
        return _h_proj(n, k, 0) - _h_proj(n, k - 2, 0)
    if i == m:
        return _h_proj(n, k - 2, n) - _h_proj(n, k, n)
    return 0


def sym_twists(e: tuple[int, ...], a: int) -> list[int]:
    """Twists of ``Sym^a(O(e_1) + ... + O(e_m))``, one per monomial."""
    return [sum(e[j] for j in combo) for combo in combinations_with_replacement(range(len(e)), a)]


def _h_scroll(e: tuple[int, ...], a: int, b: int, i: int) -> int:
    m = len(e)
    if a >= 0:
        if i > 1:
            return 0
        return sum(h_p1(b + t, i) for t in sym_twists(e, a))
    if a > -m:
        return 0
    # Serre duality with K = -mH + (r-2)F
    r = sum(e)
    return _h_scroll(e, -m - a, r - 2 - b, m - i)


def h_target(Y: TargetSpec, D: DivisorClass, i: int) -> int:
    if i < 0 or i > Y.dim:
        raise ValueError(f"i={i} outside 0..{Y.dim} for {Y}")
    if isinstance(Y, Scroll):
        if not isinstance(D, ScrollClass):
            raise TypeError(f"scroll classes are aH + bF, got {D!r}")
        return _h_scroll(Y.e, D.a, D.b, i)
    if not isinstance(D, LineClass):
        raise TypeError(f"{Y} classes are multiples of the hyperplane, got {D!r}")
    if isinstance(Y, Veronese):
        twice = 2 * D.k
        if Fraction(twice).denominator != 1:
            raise ValueError(f"O({D.k}) is not a line bundle on the Veronese surface")
        return _h_proj(2, int(twice), i)
    if not D.is_integral():
        raise ValueError(f"non-integral class {D} on {Y}")
    if isinstance(Y, ProjSpace):
        return _h_proj(Y.m, D.k, i)
    if isinstance(Y, Quadric):
        return _h_quadric(Y.m, D.k, i)
    raise TypeError(f"unknown target {Y!r}")


def parse_target(text: str) -> TargetSpec:
    """Parse ``pm:<m>``, ``quadric:<m>``, ``scroll:<e1,e2,...>`` or ``veronese``."""
    text = text.strip().lower()
    if text == "veronese":
        return Veronese()
    kind, sep, arg = text.partition(":")
    if not sep or not arg:
        raise ValueError(f"malformed target {text!r}")
    try:
        if kind == "pm":
            return ProjSpace(int(arg))
        if kind == "quadric":
            return Quadric(int(arg))
        if kind == "scroll":
            return Scroll(tuple(int(x) for x in arg.split(",")))
    except ValueError as exc:
        raise ValueError(f"malformed target {text!r}: {exc}") from None
    raise ValueError(f"unknown target kind {kind!r}")


def target_json(Y: TargetSpec) -> dict:
    if isinstance(Y, ProjSpace):
        return {"kind": "pm", "m": Y.m}
    if isinstance(Y, Quadric):
        return {"kind": "quadric", "m": Y.m}
    if isinstance(Y, Scroll):
        return {"kind": "scroll", "e": list(Y.e), "m": Y.dim, "r": Y.degree}
    return {"kind": "veronese", "m": 2}
