"""Undirected diagrams: catalog classification, Cartan matrices, additive functions."""
from .cartan import (
    AdditiveVerdict,
    SubadditiveResult,
    additive_dynkin_verdict,
    cartan,
    check_subadditive,
    is_positive_definite,
    is_positive_semidefinite,
    primitive_integer_vector,
    radical_generator,
)
from .catalog import catalog_graph, cycle_graph, iter_catalog, path_graph, star_graph
from .classify import EuclideanWitness, classify, contains_euclidean, infinite_reading
from .models import DiagramTag, DiagramType, UndirectedGraph, parse_graph

__all__ = [
    "DiagramTag",
    "DiagramType",
    "UndirectedGraph",
    "parse_graph",
    "classify",
    "contains_euclidean",
    "infinite_reading",
    "EuclideanWitness",
    "cartan",
    "check_subadditive",
    "SubadditiveResult",
    "additive_dynkin_verdict",
    "AdditiveVerdict",
    "is_positive_definite",
    "is_positive_semidefinite",
    "radical_generator",
    "primitive_integer_vector",
    "catalog_graph",
    "iter_catalog",
    "path_graph",
    "cycle_graph",
    "star_graph",
]
