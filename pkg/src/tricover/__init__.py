"""Exact analysis of triple canonical covers of varieties of minimal degree."""

from .analyzer import (
    CoverParams,
    N0Status,
    ParityError,
    beta_image,
    block_dims,
    generator_profile,
    lift_codim,
    n0_status,
    splitting,
)
from .classifier import classify, cyclic_example, dimension_parity_gate, parity_gate
from .cohomology import ProjSpace, Quadric, Scroll, Veronese, canonical_class, h_p1, h_target
from .oracle import build_cover, genus_check, mult_image_rank, verify_grid

__all__ = [
    "CoverParams",
    "N0Status",
    "ParityError",
    "ProjSpace",
    "Quadric",
    "Scroll",
    "Veronese",
    "beta_image",
    "block_dims",
    "build_cover",
    "canonical_class",
    "classify",
    "cyclic_example",
    "dimension_parity_gate",
    "generator_profile",
    "genus_check",
    "h_p1",
    "h_target",
    "lift_codim",
    "mult_image_rank",
    "n0_status",
    "parity_gate",
    "splitting",
    "verify_grid",
]
