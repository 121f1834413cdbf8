"""Sectional paths, tau-orbits, subgraph types and finiteness verdicts."""
from .largeness import LargePair, find_large_pairs, inner_modules, is_large_between
from .orbits import Orbit, OrbitClass, OrbitGraph, tau_orbits
from .paths import (
    PathInQuiver,
    is_presectional,
    is_sectional,
    sectional_paths_from,
    shortest_sectional_path,
)
from .search import TauShiftedPath, distance, find_tau_shifted_path
from .subgraphs import (
    SectionalSubgraph,
    eligible_subgraph,
    full_sectional_subgraph,
    is_cohelical,
    is_helical,
    is_sectional_subgraph,
    left_subgraph_type,
    right_subgraph_type,
    subgraph_reading,
    subgraph_type,
)
from .verdict import ComponentVerdict, Verdict, VerdictRule, finiteness_verdict

__all__ = [
    "ComponentVerdict",
    "LargePair",
    "Orbit",
    "OrbitClass",
    "OrbitGraph",
    "PathInQuiver",
    "SectionalSubgraph",
    "TauShiftedPath",
    "Verdict",
    "VerdictRule",
    "distance",
    "eligible_subgraph",
    "find_large_pairs",
    "find_tau_shifted_path",
    "finiteness_verdict",
    "full_sectional_subgraph",
    "inner_modules",
    "is_cohelical",
    "is_helical",
    "is_large_between",
    "is_presectional",
    "is_sectional",
    "is_sectional_subgraph",
    "left_subgraph_type",
    "right_subgraph_type",
    "sectional_paths_from",
    "shortest_sectional_path",
    "subgraph_reading",
    "subgraph_type",
    "tau_orbits",
]
