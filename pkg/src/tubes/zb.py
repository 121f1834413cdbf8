"""Directed trees B and the translation quivers ZB built over them.

ZB has a vertex (n, x) for every integer n and vertex x of B. An arrow
x -> y of B gives the two arrows (n, x) -> (n, y) and (n, y) -> (n - 1, x),
and the translation is tau(n, x) = (n + 1, x).
"""
from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from ..core.errors import PreconditionError
from ..diagrams.models import UndirectedGraph
from ..quiver.models import ARVertex, OneArrow, TranslationQuiver

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DirectedTree:
    """Oriented tree: no loops, no multiple arrows, no cycles."""

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...] = ()
    root: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.vertices:
            raise PreconditionError("a directed tree needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError("duplicate vertex in directed tree")
        known = set(self.vertices)
        seen: set[frozenset[str]] = set()
        for x, y in self.arrows:
            if x not in known or y not in known:
                raise PreconditionError(f"arrow {x}->{y} leaves the tree")
            if x == y:
                raise PreconditionError(f"loop at {x}")
            key = frozenset((x, y))
            if key in seen:
                raise PreconditionError(f"multiple arrows between {x} and {y}")
            seen.add(key)
        if not nx.is_tree(self.to_networkx().to_undirected()):
            raise PreconditionError("underlying graph is not a tree")
        if self.root is not None and self.root not in known:
            raise PreconditionError(f"root {self.root} is not a vertex")

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.arrows)
        return g

    def underlying_graph(self) -> UndirectedGraph:
        return UndirectedGraph(
            self.vertices, tuple((x, y, 1) for x, y in self.arrows)
        )

    def opposite(self) -> DirectedTree:
        return DirectedTree(
            self.vertices, tuple((y, x) for x, y in self.arrows), self.root
        )


def zb_id(n: int, x: str) -> str:
    return f"({n},{x})"


def _vertex(n: int, x: str, complete: bool) -> ARVertex:
    return ARVertex(
        id=zb_id(n, x),
        label=zb_id(n, x),
        dim=None,
        length=None,
        projective=False,
        ext_injective=False,
        mesh_complete=complete,
    )


def zb_window(b: DirectedTree, n_range: Iterable[int]) -> TranslationQuiver:
    """Finite window of ZB on the levels in `n_range`.

    The mesh ending at (n, x) needs level n + 1, so the top level of the
    window is flagged mesh-incomplete.

    Raises:
        PreconditionError: Empty level range.
    """
    levels = sorted(set(n_range))
    if not levels:
        raise PreconditionError("empty level range for ZB window")
    present = set(levels)
    vertices = [
        _vertex(n, x, n + 1 in present) for n in levels for x in b.vertices
    ]
    arrows: list[OneArrow] = []
    for n in levels:
        for x, y in b.arrows:
            arrows.append(OneArrow(zb_id(n, x), zb_id(n, y)))
            if n - 1 in present:
                arrows.append(OneArrow(zb_id(n, y), zb_id(n - 1, x)))
    translation = tuple(
        (zb_id(n, x), zb_id(n + 1, x))
        for n in levels
        if n + 1 in present
        for x in b.vertices
    )
    window = TranslationQuiver(
        tuple(vertices),
        tuple(arrows),
        translation,
        name=f"ZB[{levels[0]}..{levels[-1]}]",
    ).canonical()
    logger.debug(f"ZB window with {len(window)} vertices built")
    return window


def zb_quotient(b: DirectedTree, k: int) -> TranslationQuiver:
    """The finite stable translation quiver ZB / <tau^k>.

    Levels are taken modulo k; every mesh is complete.
    """
    if k < 1:
        raise PreconditionError(f"quotient period must be positive, got {k}")
    vertices = [_vertex(n, x, True) for n in range(k) for x in b.vertices]
    arrows: list[OneArrow] = []
    for n in range(k):
        for x, y in b.arrows:
            arrows.append(OneArrow(zb_id(n, x), zb_id(n, y)))
            arrows.append(OneArrow(zb_id(n, y), zb_id((n - 1) % k, x)))
    translation = tuple(
        (zb_id(n, x), zb_id((n + 1) % k, x)) for n in range(k) for x in b.vertices
    )
    return TranslationQuiver(
        tuple(vertices), tuple(arrows), translation, name=f"ZB/tau^{k}"
    ).canonical()
