"""Bicyclic polytopes: convex hulls of points on the symmetric moment curve."""

from .circle import SymmetricPointSet, arc_distance, equally_spaced, symmetrize
from .curve import nonflatness_check, sm_derivative, sm_eval
from .polytope import Polytope, build
from .raked import (
    RakedTrigPoly,
    RootMultiset,
    SelfInvPoly,
    deform,
    poly_from_multiset,
    power_sum_check,
    selfinv_roots,
    trig_to_selfinv,
)

__all__ = [
    "SymmetricPointSet",
    "arc_distance",
    "equally_spaced",
    "symmetrize",
    "nonflatness_check",
    "sm_derivative",
    "sm_eval",
    "Polytope",
    "build",
    "RakedTrigPoly",
    "RootMultiset",
    "SelfInvPoly",
    "deform",
    "poly_from_multiset",
    "power_sum_check",
    "selfinv_roots",
    "trig_to_selfinv",
]
