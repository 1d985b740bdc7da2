"""Polynomial curves on trinomial hypersurfaces: exact constructions and checks."""

from .construct import (
    ConstructionTrace,
    combine_squares,
    lift_horizontal,
    sh_curve,
    surface_all_two_horizontal,
    surface_coprime_horizontal,
    trivial_curve,
    type1_horizontal,
)
from .model import Classification, Curve, TrinomialSpec, classify, torus_weights
from .tower import AlgNum, Tower, adjoin, split
from .upoly import UPoly, exact_div, gcd_monic, is_proportional, poly_sqrt, radical_and_d0
from .verify import (
    VerifyReport,
    block_values,
    in_smooth_locus,
    is_horizontal,
    is_sh,
    mason_stothers,
    on_hypersurface,
    sh_inequality_report,
)

__all__ = [
    "AlgNum",
    "Classification",
    "ConstructionTrace",
    "Curve",
    "Tower",
    "TrinomialSpec",
    "UPoly",
    "VerifyReport",
    "adjoin",
    "block_values",
    "classify",
    "combine_squares",
    "exact_div",
    "gcd_monic",
    "in_smooth_locus",
    "is_horizontal",
    "is_proportional",
    "is_sh",
    "lift_horizontal",
    "mason_stothers",
    "on_hypersurface",
    "poly_sqrt",
    "radical_and_d0",
    "sh_curve",
    "sh_inequality_report",
    "split",
    "surface_all_two_horizontal",
    "surface_coprime_horizontal",
    "torus_weights",
    "trivial_curve",
    "type1_horizontal",
]
