"""Which minimal-degree targets carry a flat triple canonical cover.

A flat triple canonical cover ``X -> Y`` has ``pi_* O_X = O + L^-1 + L^-2``
with ``K_Y = L^-2(1)``, i.e. ``2L = H - K_Y`` in Pic(Y).  Solving that
equation decides the target; cohomology of ``-L``, ``-2L`` and ``H - L``,
``H - 2L`` then confirms pluriregularity and completeness of the canonical
series.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cohomology import (
    DivisorClass,
    LineClass,
    ProjSpace,
    Quadric,
    Scroll,
    ScrollClass,
    TargetSpec,
    Veronese,
    canonical_class,
    h_target,
    hyperplane,
)

ASSUMED_HYPOTHESES = ("K_X ample", "pi flat", "Y smooth (cones not modelled)")

SCROLL_NOTE = (
    "the scroll construction names (m+1)/2 H - (r-2)/2 F as the branch divisor; "
    "that class is L itself, while a cyclic triple cover defined by L branches "
    "along a divisor in |3L|. Both classes are reported."
)
VERONESE_NOTE = (
    "Veronese surface: K = O_P2(-3) and H = O_P2(2), so L^2 = O_P2(5) has no "
    "solution in Pic = Z; this smooth minimal-degree surface is absent from the "
    "target list and is rejected by computation"
)


@dataclass(frozen=True)
class TargetVerdict:
    target: TargetSpec
    allowed: bool
    reason: str
    L: Optional[DivisorClass] = None
    pushforward: Optional[tuple[DivisorClass, DivisorClass, DivisorClass]] = None
    complete_series: bool = False
    pluriregular: bool = False


@dataclass(frozen=True)
class CyclicExample:
    target: TargetSpec
    L: DivisorClass
    branch_class: DivisorClass
    canonical_pullback_check: bool
    h0_KX: int
    stated_branch_class: Optional[DivisorClass] = None
    notes: tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class ParityGate:
    m: int
    n: int
    sectional_quantity: int
    consistent: bool
    message: str


def _solve_L(Y: TargetSpec) -> tuple[Optional[DivisorClass], str]:
    """Solve ``2L = H - K_Y``; returns (L or None, reason)."""
    if isinstance(Y, ProjSpace):
        if Y.m % 2:
            return None, f"Theorem 3.3: K = O({-Y.m - 1}) forces 2L = O({Y.m + 2}); m has to be even"
        return LineClass((Y.m + 2) // 2), "Theorem 3.3(1): P^m with m even"
    if isinstance(Y, Quadric):
        if Y.m % 2 == 0:
            return None, f"Theorem 3.3: K = O({-Y.m}) forces 2L = O({Y.m + 1}); m has to be odd"
        return LineClass((Y.m + 1) // 2), "Theorem 3.3(3): smooth quadric of odd dimension"
    if isinstance(Y, Scroll):
        m, r = Y.dim, Y.degree
        problems = []
        if m % 2 == 0:
            problems.append("m has to be odd")
        if r % 2:
            problems.append("r has to be even")
        if problems:
            return None, (
                f"Theorem 3.3: K = -{m}H + {r - 2}F forces 2L = {m + 1}H - {r - 2}F; "
                + " and ".join(problems)
            )
        return (
            ScrollClass((m + 1) // 2, -((r - 2) // 2)),
            "Theorem 3.3(2): smooth scroll of odd dimension and even degree",
        )
    if isinstance(Y, Veronese):
        return None, VERONESE_NOTE
    raise TypeError(f"malformed target {Y!r}")


def classify(Y: TargetSpec) -> TargetVerdict:
    if not isinstance(Y, (ProjSpace, Quadric, Scroll, Veronese)):
        raise TypeError(f"malformed target {Y!r}")
    L, reason = _solve_L(Y)
    if L is None:
        return TargetVerdict(Y, False, reason)
    H = hyperplane(Y)
    K = canonical_class(Y)
    assert K == H - 2 * L
    zero = H - H
    m = Y.dim
    complete = h_target(Y, H - L, 0) == 0 and h_target(Y, H - 2 * L, 0) == 0
    pluri = all(
        h_target(Y, D, i) == 0 for D in (zero, -L, -2 * L) for i in range(1, m)
    )
    return TargetVerdict(Y, True, reason, L, (zero, -L, -2 * L), complete, pluri)


def cyclic_example(Y: TargetSpec) -> CyclicExample:
    verdict = classify(Y)
    if not verdict.allowed:
        raise ValueError(f"no cyclic triple canonical cover of {Y}: {verdict.reason}")
    L = verdict.L
    H = hyperplane(Y)
    # K_X = pi^*(K_Y + 2L) for the cyclic cover branched in |3L|
    pullback_ok = canonical_class(Y) + 2 * L == H
    extra = [h_target(Y, H - L, 0), h_target(Y, H - 2 * L, 0)]
    if any(extra):
        raise AssertionError(f"canonical series of the cover of {Y} is not pulled back: {extra}")
    h0 = h_target(Y, H, 0) + sum(extra)
    stated = None
    notes: list[str] = ["K_X ample is assumed, not checked"]
    if isinstance(Y, Scroll):
        stated = L
        notes.append(SCROLL_NOTE)
    return CyclicExample(Y, L, 3 * L, pullback_ok, h0, stated, tuple(notes))


def parity_gate(m: int, n: int) -> ParityGate:
    """Sectional-genus parity for a degree-``n`` canonical map onto a scroll.

    The curve ``pi^* g`` over a line in a fiber has ``2g - 2 = (m-1) n``, which
    must be even.
    """
    t = (m - 1) * n
    ok = t % 2 == 0
    if ok:
        msg = "consistent"
    elif n == 3:
        msg = "Theorem 3.2: for a triple canonical cover of a scroll m must be odd"
    else:
        msg = "Theorem 3.2: either n is even or m is odd"
    return ParityGate(m, n, t, ok, msg)


def dimension_parity_gate(m: int, r: int) -> bool:
    """False when an odd-dimensional X would cover a target of odd degree."""
    return m % 2 == 0 or r % 2 == 0

