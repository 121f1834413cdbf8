"""Mesh completion, knitting of components, length bounds and growth evidence."""
from .bounds import Bounds, harada_sai_bound, length_bounds
from .growth import (
    GrowthEvidence,
    GrowthReport,
    GrowthRule,
    LengthTrend,
    OrbitTrend,
    growth_analysis,
    orbit_length_trend,
)
from .hereditary import DEFAULT_SLICE_CAP, KnitDirection, KnitFrontier, knit_hereditary
from .mesh import DimVector, MeshCloses, complete_mesh
from .seeds import (
    KnitRecipe,
    ScheduleEntry,
    ScheduleKind,
    knit_from_seeds,
    load_recipe,
    recipe_from_data,
)

__all__ = [
    "DEFAULT_SLICE_CAP",
    "Bounds",
    "DimVector",
    "GrowthEvidence",
    "GrowthReport",
    "GrowthRule",
    "KnitDirection",
    "KnitFrontier",
    "KnitRecipe",
    "LengthTrend",
    "MeshCloses",
    "OrbitTrend",
    "ScheduleEntry",
    "ScheduleKind",
    "complete_mesh",
    "growth_analysis",
    "harada_sai_bound",
    "knit_from_seeds",
    "knit_hereditary",
    "length_bounds",
    "load_recipe",
    "orbit_length_trend",
    "recipe_from_data",
]
