"""Closed-form engine for triple canonical covers of minimal-degree varieties.

Everything is a function of ``m = dim X`` and ``r = deg Y``.  Restricting the
canonical bundle to a general curve section ``C`` gives a triple cover
``C -> P^1`` with pushforward ``O + O(-a1) + O(-a2)``, and the sections of
``theta^n`` split into three blocks of P^1-sections::

    A(n) = H^0(O(n r))
    B(n) = H^0(O(n r - a1))
    C(n) = H^0(O(n r - a2))

Multiplication respects the algebra structure of the pushforward, which fixes
exactly which blocks the image of ``H^0(theta^s1) x H^0(theta^s2)`` reaches.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cohomology import h_p1


class ParityError(ValueError):
    """(m, r) cannot carry a triple canonical cover."""


class LiftError(ValueError):
    pass


@dataclass(frozen=True)
class CoverParams:
    m: int
    r: int
    cover_degree: int = 3

    def __post_init__(self):
        if self.cover_degree != 3:
            raise ValueError(f"only triple covers are modelled, got degree {self.cover_degree}")
        if self.m < 2:
            raise ValueError(f"dimension m must be >= 2, got {self.m}")
        if self.r < 1:
            raise ValueError(f"degree r must be >= 1, got {self.r}")
        if self.m % 2 == 1 and self.r % 2 == 1:
            raise ParityError(
                f"Theorem 3.1: r must be even when m is odd (got m={self.m}, r={self.r})"
            )

    @property
    def odd(self) -> bool:
        return self.m % 2 == 1

    @property
    def b_threshold(self) -> int:
        """First exponent with a nonzero B block."""
        return (self.m + 1) // 2 if self.odd else (self.m + 2) // 2

    @property
    def c_threshold(self) -> int:
        return self.m + 1 if self.r >= 2 else self.m + 2


@dataclass(frozen=True)
class SplittingType:
    a1: int
    a2: int

    def pushforward(self) -> str:
        return f"O + O(-{self.a1}) + O(-{self.a2})"


def splitting(params: CoverParams) -> SplittingType:
    mr = params.m * params.r
    # relative duality forces mr = a2 - 2 and mr - a1 = a1 - 2
    return SplittingType((mr + 2) // 2, mr + 2)


@dataclass(frozen=True)
class BlockDims:
    n: int
    degA: int
    degB: int
    degC: int
    dimA: int
    dimB: int
    dimC: int

    @property
    def total(self) -> int:
        return self.dimA + self.dimB + self.dimC

    def dims(self) -> tuple[int, int, int]:
        return (self.dimA, self.dimB, self.dimC)


def block_dims(params: CoverParams, n: int) -> BlockDims:
    if n < 0:
        raise ValueError(f"exponent must be >= 0, got {n}")
    s = splitting(params)
    degA = n * params.r
    degB = degA - s.a1
    degC = degA - s.a2
    return BlockDims(n, degA, degB, degC, h_p1(degA, 0), h_p1(degB, 0), h_p1(degC, 0))


def h0_theta(params: CoverParams, n: int) -> int:
    return block_dims(params, n).total


@dataclass(frozen=True)
class ImageProfile:
    s1: int
    s2: int
    coversA: bool
    coversB: bool
    coversC: bool
    image_dim: int
    codim: int

    @property
    def surjective(self) -> bool:
        return self.codim == 0


def beta_image(params: CoverParams, s1: int, s2: int) -> ImageProfile:
    """Image of ``H^0(theta^s1) x H^0(theta^s2) -> H^0(theta^(s1+s2))``.

    The rule is exact.  A x A, A x B and A x C surject onto their blocks since
    P^1-sections of nonnegative degree multiply onto.  C is reached either
    through A x C, or through B x B, whose component into C is a nonzero map
    between equal twists (2*a1 = a2) and hence an isomorphism.
    """
    if s1 < 0 or s2 < 0:
        raise ValueError("exponents must be >= 0")
    b1, b2 = block_dims(params, s1), block_dims(params, s2)
    tgt = block_dims(params, s1 + s2)
    coversB = b1.dimB > 0 or b2.dimB > 0
    coversC = b1.dimC > 0 or b2.dimC > 0 or (b1.dimB > 0 and b2.dimB > 0)
    image = tgt.dimA + (tgt.dimB if coversB else 0) + (tgt.dimC if coversC else 0)
    return ImageProfile(s1, s2, True, coversB, coversC, image, tgt.total - image)


def degree_one_generators(params: CoverParams) -> int:
    """``h^0(K_X)``: the canonical image spans ``P^(r+m-1)``."""
    return params.r + params.m


def generator_profile(params: CoverParams) -> dict[int, int]:
    """Number of new minimal generators of the canonical ring in each degree."""
    profile = {1: degree_one_generators(params)}
    top = params.m + 2
    for n in range(2, top + 1):
        new = _new_generators(params, n)
        if n == top:
            # beta_n surjects from here on
            assert new == 0, f"unexpected generators in degree {n} for {params}"
        if new:
            profile[n] = new
    return profile


def _new_generators(params: CoverParams, n: int) -> int:
    # the blocks are canonical subspaces, so the span of the images of all
    # splits covers a block iff one split covers it
    tgt = block_dims(params, n)
    coversB = coversC = False
    for s in range(1, n):
        prof = beta_image(params, s, n - s)
        coversB |= prof.coversB
        coversC |= prof.coversC
    spanned = tgt.dimA + (tgt.dimB if coversB else 0) + (tgt.dimC if coversC else 0)
    return tgt.total - spanned


def lift_codim(
    curve_codim: int,
    params: CoverParams | None = None,
    s1: int | None = None,
    s2: int | None = None,
) -> int:
    """Codimension of the multiplication image on X from the curve section.

    Equal to the curve-level codimension, provided every ``beta(s', s2)`` with
    ``1 <= s' <= s1 - 1`` surjects.  When ``params`` and the pair are given
    that hypothesis is checked first.
    """
    if curve_codim < 0:
        raise ValueError("codimension must be >= 0")
    if params is not None:
        if s1 is None or s2 is None:
            raise ValueError("checking the lift needs both s1 and s2")
        for sp in range(1, s1):
            if not beta_image(params, sp, s2).surjective:
                raise LiftError(
                    f"Lemma 2.3 hypothesis not met: beta({sp},{s2}) is not surjective"
                )
    return curve_codim


class N0Status(str, enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class N0Verdict:
    n: int
    status: N0Status
    source: str


def n0_status(params: CoverParams, n: int) -> N0Verdict:
    """Projective normality of ``n K_X`` (K_X assumed ample)."""
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    m, r = params.m, params.r
    if params.odd:
        ok = n >= (m + 1) // 2
        return N0Verdict(n, N0Status.HOLDS if ok else N0Status.FAILS, "Theorem 2.9")
    if r == 1:
        ok = n >= (m + 2) // 2
        return N0Verdict(n, N0Status.HOLDS if ok else N0Status.FAILS, "Theorem 2.13(1)")
    if n <= m // 2:
        return N0Verdict(n, N0Status.FAILS, "Theorem 2.13(2)")
    if n >= m + 1:
        return N0Verdict(n, N0Status.HOLDS, "Theorem 2.13(2)")
    return N0Verdict(n, N0Status.UNKNOWN, "Question 2.14")
