"""Sectional subgraphs, their types, and helical components."""
from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from ..core.errors import PreconditionError, WindowTooSmallError
from ..diagrams.classify import classify, infinite_reading
from ..diagrams.models import DiagramTag, DiagramType, UndirectedGraph
from ..quiver.models import TranslationQuiver

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SectionalSubgraph:
    """Vertex subset of a window with all arrows between its vertices."""

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, int], ...]
    full: bool
    open_vertices: tuple[str, ...] = ()

    @property
    def boundary_open(self) -> bool:
        return bool(self.open_vertices)

    def underlying_graph(self) -> UndirectedGraph:
        return UndirectedGraph(self.vertices, self.arrows)

    def __contains__(self, vertex_id: object) -> bool:
        return vertex_id in self.vertices

    def __str__(self) -> str:
        return ", ".join(self.vertices)


def is_sectional_subgraph(window: TranslationQuiver, vertices: Iterable[str]) -> bool:
    """Connected, and every length-two path inside it is sectional."""
    chosen = set(vertices)
    if not chosen:
        return False
    g = window.to_networkx().subgraph(chosen)
    if not nx.is_weakly_connected(g):
        return False
    for b in chosen:
        for a in window.preds(b):
            if a not in chosen:
                continue
            for c in window.succs(b):
                if c in chosen and window.tau(c) == a:
                    return False
    return True


def _extends(window: TranslationQuiver, chosen: set[str], v: str) -> bool:
    """Whether chosen + v is still sectional, v being adjacent to chosen."""
    inside = chosen | {v}
    t = window.tau(v)
    t_inv = window.tau_inv(v)
    # v may sit anywhere on a length-two path
    if t in inside:
        if any(b in inside and t in window.preds(b) for b in window.preds(v)):
            return False
    for a in window.preds(v):
        for c in window.succs(v):
            if a in inside and c in inside and window.tau(c) == a:
                return False
    if t_inv in inside:
        if any(b in inside and t_inv in window.succs(b) for b in window.succs(v)):
            return False
    return True


def _subgraph(
    window: TranslationQuiver, vertices: list[str], full: bool
) -> SectionalSubgraph:
    chosen = set(vertices)
    arrows = tuple(
        (a.source, a.target, a.valuation)
        for a in window.arrows
        if a.source in chosen and a.target in chosen
    )
    opened = tuple(v for v in vertices if window.is_boundary(v))
    return SectionalSubgraph(tuple(vertices), arrows, full, opened)


def full_sectional_subgraph(
    window: TranslationQuiver, seed: str, allowed: Optional[set[str]] = None
) -> SectionalSubgraph:
    """Grow a maximal sectional subgraph from `seed`.

    Neighbours are tried in window order and kept when the extension stays
    sectional. With `allowed` the growth never leaves that vertex set; the
    result is full only when no neighbour in the whole window extends it.
    """
    window.vertex(seed)
    pos = {v: i for i, v in enumerate(window.ids)}
    chosen = {seed}
    grew = True
    while grew:
        grew = False
        frontier = {
            n
            for v in chosen
            for n in (*window.preds(v), *window.succs(v))
            if n not in chosen and (allowed is None or n in allowed)
        }
        for v in sorted(frontier, key=pos.__getitem__):
            if _extends(window, chosen, v):
                chosen.add(v)
                grew = True
                break
    ordered = sorted(chosen, key=pos.__getitem__)
    outside = {
        n
        for v in chosen
        for n in (*window.preds(v), *window.succs(v))
        if n not in chosen
    }
    full = not any(_extends(window, chosen, v) for v in outside)
    logger.debug(f"full sectional subgraph from {seed}: {len(ordered)} vertices")
    return _subgraph(window, ordered, full=full)


def subgraph_type(s: SectionalSubgraph) -> DiagramType:
    """Classify the underlying graph; valuations become edge multiplicities."""
    if not s.full:
        raise PreconditionError("subgraph type needs a full sectional subgraph")
    dtype = classify(s.underlying_graph())
    return dtype.opened() if s.boundary_open else dtype


def subgraph_reading(s: SectionalSubgraph) -> DiagramType:
    """Type with window-cut arms read as infinite ones."""
    return infinite_reading(s.underlying_graph(), s.open_vertices)


def _reachable_from(window: TranslationQuiver, sources: Iterable[str]) -> set[str]:
    g = window.to_networkx()
    reached: set[str] = set()
    for s in sources:
        reached.add(s)
        reached |= nx.descendants(g, s)
    return reached


def is_helical(window: TranslationQuiver) -> bool:
    """Every interior vertex is reached by a path from an Ext-injective vertex."""
    injectives = [v.id for v in window.vertices if v.ext_injective]
    if not injectives:
        return False
    reached = _reachable_from(window, injectives)
    return all(v in reached for v in window.interior())


def is_cohelical(window: TranslationQuiver) -> bool:
    return is_helical(window.opposite())


def eligible_subgraph(window: TranslationQuiver) -> Optional[SectionalSubgraph]:
    """First sectional subgraph with no path from an Ext-injective vertex.

    Each seed grows inside the vertices no Ext-injective vertex reaches.
    Seeds are tried in window order; subgraphs that avoid the window boundary
    are preferred over ones that touch it.
    """
    injectives = [v.id for v in window.vertices if v.ext_injective]
    tainted = _reachable_from(window, injectives)
    candidates = [v for v in window.ids if v not in tainted]
    allowed = set(candidates)
    fallback: Optional[SectionalSubgraph] = None
    for seed in candidates:
        s = full_sectional_subgraph(window, seed, allowed=allowed)
        if not s.boundary_open:
            return s
        if fallback is None:
            fallback = s
    return fallback


def _require_left_stable(window: TranslationQuiver) -> None:
    projective = [v.id for v in window.vertices if v.projective]
    if projective:
        raise PreconditionError(
            f"window is not left stable: projective vertex {projective[0]}"
        )


def left_subgraph_type(window: TranslationQuiver) -> DiagramType:
    """A∞ for helical components, else the type of an eligible subgraph.

    Raises:
        PreconditionError: The window holds a projective vertex.
        WindowTooSmallError: No eligible subgraph avoids the window boundary.
    """
    _require_left_stable(window)
    if is_helical(window):
        return DiagramType(DiagramTag.A_INFINITY)
    s = eligible_subgraph(window)
    if s is None or s.boundary_open:
        raise WindowTooSmallError(
            f"window '{window.name}' shows no full sectional subgraph clear of "
            f"Ext-injective vertices and of the window boundary"
        )
    return subgraph_reading(s)


def right_subgraph_type(window: TranslationQuiver) -> DiagramType:
    """Dual of left_subgraph_type, read on the opposite window."""
    if any(v.ext_injective for v in window.vertices):
        raise PreconditionError("window is not right stable")
    return left_subgraph_type(window.opposite())
