"""Exact analysis of homogeneous rank-2 locally nilpotent derivations on ``k[X, Y, Z]``.

The main entry points are :func:`analyze` (normal form and triangularizability
verdict) and :func:`image_ideal` (generators of ``D^n(B) ∩ ker D``).
"""

from __future__ import annotations

from .coords import LinearChange
from .derivation import Derivation, KernelPair, deg_d, jacobian_derivation, nilpotency_probe
from .errors import Rank2Error
from .image_ideal import image_ideal, truncated_freeness_check
from .newton import grnp_shape_check, kernel_triangle_check, newton_polygon
from .normal_form import Analysis, Verdict, analyze
from .parse import parse_polynomial
from .poly import Polynomial
from .spec_io import parse_spec

__version__ = "0.1.0"

__all__ = [
    "Analysis", "Derivation", "KernelPair", "LinearChange", "Polynomial", "Rank2Error", "Verdict", "analyze",
    "deg_d", "grnp_shape_check", "image_ideal", "jacobian_derivation", "kernel_triangle_check",
    "newton_polygon", "nilpotency_probe", "parse_polynomial", "parse_spec", "truncated_freeness_check",
]
