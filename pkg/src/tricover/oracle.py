"""Brute-force multiplication ranks on explicit cyclic triple covers of P^1.

The curve is ``z^3 = f(x, y)`` with ``f`` a squarefree binary form of degree
``d = 3 a1``.  Chart convention, fixed for the whole package: a section of
``theta^n`` is ``u0 + u1 z + u2 z^2`` where ``u_k`` is a binary form of degree
``n r - k d / 3``.  Products follow ``z^3 = f``, so a z-exponent of 3 or 4 is
reduced by multiplying the coefficient form by ``f``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal

from .analyzer import CoverParams, beta_image
from .exact import HomogPoly, is_squarefree, poly_product, rank_of_rows

DEFAULT_GUARD = 4_000_000
MAX_SEED_RETRIES = 64


class OracleGuardError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleCover:
    m: int
    r: int
    d: int
    f: HomogPoly
    coeff_mode: str = "distinct"
    seed: int | None = None

    @property
    def a1(self) -> int:
        return self.d // 3

    def block_degrees(self, n: int) -> tuple[int, int, int]:
        return tuple(n * self.r - k * self.a1 for k in range(3))


def build_cover(
    m: int,
    r: int,
    coeff_mode: Literal["distinct", "random"] = "distinct",
    seed: int = 0,
) -> OracleCover:
    CoverParams(m, r)
    d = 3 * (m * r + 2) // 2
    if coeff_mode == "distinct":
        f = poly_product(HomogPoly.linear(1, -i) for i in range(d))
        return OracleCover(m, r, d, f, "distinct", None)
    if coeff_mode != "random":
        raise ValueError(f"unknown coefficient mode {coeff_mode!r}")
    for s in range(seed, seed + MAX_SEED_RETRIES):
        rng = random.Random(s)
        f = HomogPoly(d, tuple(rng.randint(-9, 9) for _ in range(d + 1)))
        if not f.is_zero() and is_squarefree(f):
            return OracleCover(m, r, d, f, "random", s)
    raise RuntimeError(
        f"no squarefree form of degree {d} in seeds {seed}..{seed + MAX_SEED_RETRIES - 1}"
    )


@dataclass(frozen=True)
class SectionBasis:
    """Monomials ``x^i y^(deg-i) z^k`` spanning ``H^0(theta^n)``, block by block."""

    n: int
    degrees: tuple[int, int, int]

    @property
    def sizes(self) -> tuple[int, int, int]:
        return tuple(max(0, deg + 1) for deg in self.degrees)

    @property
    def offsets(self) -> tuple[int, int, int]:
        a, b, _ = self.sizes
        return (0, a, a + b)

    def __len__(self) -> int:
        return sum(self.sizes)

    def monomials(self) -> list[tuple[int, int]]:
        """``(k, i)`` pairs in coordinate order."""
        return [(k, i) for k in range(3) for i in range(self.sizes[k])]


def section_basis(cov: OracleCover, n: int) -> SectionBasis:
    return SectionBasis(n, cov.block_degrees(n))


def genus_check(cov: OracleCover) -> bool:
    # Riemann-Hurwitz: each of the d branch points is totally ramified
    two_g_minus_2 = 3 * (-2) + 2 * cov.d
    g = two_g_minus_2 // 2 + 1
    g_sections = len(section_basis(cov, cov.m))
    return g == g_sections and two_g_minus_2 == 3 * cov.m * cov.r


@dataclass(frozen=True)
class RankReport:
    s1: int
    s2: int
    oracle_rank: int
    predicted_dim: int
    target_dim: int

    @property
    def match(self) -> bool:
        return self.oracle_rank == self.predicted_dim


def product_rows(cov: OracleCover, s1: int, s2: int) -> tuple[list[list[int]], int]:
    """Coordinates of every pairwise product of basis monomials in degree s1+s2."""
    b1, b2 = section_basis(cov, s1), section_basis(cov, s2)
    tgt = section_basis(cov, s1 + s2)
    width = len(tgt)
    f = cov.f.coeffs
    rows: dict[tuple[int, ...], None] = {}
    for k1, i1 in b1.monomials():
        for k2, i2 in b2.monomials():
            k = k1 + k2
            row = [0] * width
            if k < 3:
                row[tgt.offsets[k] + i1 + i2] = 1
                block = k
            else:
                block = k - 3
                for j, c in enumerate(f):
                    if c:
                        row[tgt.offsets[block] + i1 + i2 + j] = c
            lo = tgt.offsets[block]
            hi = lo + tgt.sizes[block]
            # cyclic grading: the product lives in one block
            assert all(v == 0 for idx, v in enumerate(row) if not lo <= idx < hi)
            rows.setdefault(tuple(row), None)
    return [list(r) for r in rows], width


def mult_image_rank(
    cov: OracleCover, s1: int, s2: int, guard: int = DEFAULT_GUARD
) -> RankReport:
    if s1 < 0 or s2 < 0:
        raise ValueError("exponents must be >= 0")
    n1 = len(section_basis(cov, s1))
    n2 = len(section_basis(cov, s2))
    width = len(section_basis(cov, s1 + s2))
    if n1 * n2 * width > guard:
        raise OracleGuardError(
            f"matrix for ({s1},{s2}) would be {n1 * n2}x{width}, above guard {guard}"
        )
    rows, width = product_rows(cov, s1, s2)
    predicted = beta_image(CoverParams(cov.m, cov.r), s1, s2).image_dim
    return RankReport(s1, s2, rank_of_rows(rows, width), predicted, width)


def verify_grid(cov: OracleCover, max_total: int, guard: int = DEFAULT_GUARD) -> list[RankReport]:
    if max_total < 2:
        raise ValueError(f"max_total must be >= 2, got {max_total}")
    pairs = [
        (s1, total - s1)
        for total in range(2, max_total + 1)
        for s1 in range(1, total // 2 + 1)
    ]
    return [mult_image_rank(cov, s1, s2, guard) for s1, s2 in pairs]
