"""ZB coverings, tree types, stable tubes and coray/ray insertions."""
from .insertion import (
    Coray,
    coray_insertion,
    coray_of,
    insert_many,
    inserted_id,
    is_coray_vertex,
    ray_insertion,
)
from .recognize import TubeParams, recognize_tube, same_shape
from .stable import mouth, stable_tube, tube_id
from .tree_type import TreeType, tree_type
from .zb import DirectedTree, zb_id, zb_quotient, zb_window

__all__ = [
    "Coray",
    "DirectedTree",
    "TreeType",
    "TubeParams",
    "coray_insertion",
    "coray_of",
    "insert_many",
    "inserted_id",
    "is_coray_vertex",
    "mouth",
    "ray_insertion",
    "recognize_tube",
    "same_shape",
    "stable_tube",
    "tree_type",
    "tube_id",
    "zb_id",
    "zb_quotient",
    "zb_window",
]
