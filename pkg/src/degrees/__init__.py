"""Left and right degree bounds for arrows, and their consistency on cycles."""
from .cycles import cycle_degree_consistency, oriented_cycles
from .infer import (
    InfinitudeCertifier,
    infer_degrees,
    infer_global_left_degree,
    infer_left_degree,
    infer_right_degree,
    presectional_paths_into,
)
from .models import Certificate, DegreeBound, DegreeKind, DegreeRule, Side

__all__ = [
    "Certificate",
    "DegreeBound",
    "DegreeKind",
    "DegreeRule",
    "InfinitudeCertifier",
    "Side",
    "cycle_degree_consistency",
    "infer_degrees",
    "infer_global_left_degree",
    "infer_left_degree",
    "infer_right_degree",
    "oriented_cycles",
    "presectional_paths_into",
]
