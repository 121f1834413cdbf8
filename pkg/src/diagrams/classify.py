"""Classification against the Dynkin / Euclidean catalog."""
from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from ..core.errors import PreconditionError
from .models import OTHER, DiagramTag, DiagramType, UndirectedGraph

logger = logging.getLogger(__name__)

_STAR_TYPES: dict[tuple[int, int, int], DiagramType] = {
    (1, 2, 2): DiagramType(DiagramTag.E6),
    (1, 2, 3): DiagramType(DiagramTag.E7),
    (1, 2, 4): DiagramType(DiagramTag.E8),
    (2, 2, 2): DiagramType(DiagramTag.E6_TILDE),
    (1, 3, 3): DiagramType(DiagramTag.E7_TILDE),
    (1, 2, 5): DiagramType(DiagramTag.E8_TILDE),
}


def _arm(graph: nx.Graph, centre: str, first: str) -> list[str]:
    """Walk from centre through first along degree-2 vertices."""
    arm = [first]
    previous, current = centre, first
    while graph.degree(current) == 2:
        nxt = next(v for v in graph.neighbors(current) if v != previous)
        arm.append(nxt)
        previous, current = current, nxt
    return arm


def _ordered(g: UndirectedGraph, vertices: Iterable[str]) -> list[str]:
    pos = {v: i for i, v in enumerate(g.vertices)}
    return sorted(vertices, key=pos.__getitem__)


def _classify_tree(g: UndirectedGraph, graph: nx.Graph) -> DiagramType:
    n = len(g.vertices)
    degrees = dict(graph.degree())
    branch = _ordered(g, (v for v, d in degrees.items() if d >= 3))
    if not branch:
        return DiagramType(DiagramTag.A, n)
    if len(branch) == 1:
        centre = branch[0]
        if degrees[centre] == 4:
            if n == 5:
                return DiagramType(DiagramTag.D_TILDE, 4)
            return OTHER
        if degrees[centre] > 4:
            return OTHER
        arms = sorted(len(_arm(graph, centre, v)) for v in graph.neighbors(centre))
        p, q, r = arms
        if p == 1 and q == 1:
            return DiagramType(DiagramTag.D, r + 3)
        return _STAR_TYPES.get((p, q, r), OTHER)
    if len(branch) == 2 and all(degrees[b] == 3 for b in branch):
        for b in branch:
            leaves = [v for v in graph.neighbors(b) if degrees[v] == 1]
            if len(leaves) < 2:
                return OTHER
        return DiagramType(DiagramTag.D_TILDE, n - 1)
    return OTHER


def classify(g: UndirectedGraph) -> DiagramType:
    """Exact catalog match, or Other.

    Loops, disconnected input and edge multiplicities above 2 give Other.
    A double edge classifies as Ã(1) only on two vertices.
    """
    if not g.vertices or g.has_loops():
        return OTHER
    graph = g.to_networkx()
    if not nx.is_connected(graph):
        return OTHER
    multiplicities = [m for _, _, m in graph.edges(data="multiplicity")]
    if any(m > 2 for m in multiplicities):
        return OTHER
    if any(m == 2 for m in multiplicities):
        if len(g.vertices) == 2:
            return DiagramType(DiagramTag.A_TILDE, 1)
        return OTHER
    if nx.is_tree(graph):
        return _classify_tree(g, graph)
    if all(d == 2 for _, d in graph.degree()):
        return DiagramType(DiagramTag.A_TILDE, len(g.vertices) - 1)
    return OTHER


def infinite_reading(
    g: UndirectedGraph, open_vertices: Iterable[str]
) -> DiagramType:
    """Classify a window graph, reading truncated arms as infinite ones.

    A path with one open end reads as A∞, with both ends open as A∞∞. A D
    shape whose long arm ends open reads as D∞. Otherwise the finite type is
    returned, flagged when any vertex touches the window boundary.
    """
    opened = set(open_vertices) & set(g.vertices)
    dtype = classify(g)
    if not opened:
        return dtype
    graph = g.to_networkx()
    if dtype.tag is DiagramTag.A:
        ends = [v for v, d in graph.degree() if d <= 1]
        open_ends = [v for v in ends if v in opened]
        if len(g.vertices) > 1 and len(open_ends) == 2:
            return DiagramType(DiagramTag.A_INFINITY_INFINITY, boundary_open=True)
        return DiagramType(DiagramTag.A_INFINITY, boundary_open=True)
    if dtype.tag is DiagramTag.D and dtype.n is not None:
        centre = next(v for v, d in graph.degree() if d == 3)
        arms = sorted(
            (_arm(graph, centre, v) for v in graph.neighbors(centre)), key=len
        )
        if arms[-1][-1] in opened:
            return DiagramType(DiagramTag.D_INFINITY, boundary_open=True)
    return dtype.opened()


@dataclass(frozen=True)
class EuclideanWitness:
    """Answer of contains_euclidean."""

    found: bool
    witness: Optional[UndirectedGraph] = None
    diagram: Optional[DiagramType] = None

    def __str__(self) -> str:
        if not self.found or self.witness is None:
            return "no Euclidean subgraph"
        return f"{self.diagram} on {', '.join(self.witness.vertices)}"


def _component_witness(g: UndirectedGraph) -> Optional[UndirectedGraph]:
    graph = g.to_networkx()
    for u, v, m in g.canonical_edges():
        if m >= 2:
            return UndirectedGraph((u, v), ((u, v, 2),))
    if not nx.is_tree(graph):
        cycles = nx.minimum_cycle_basis(graph)
        shortest = min(cycles, key=lambda c: (len(c), _ordered(g, c)))
        return g.subgraph(shortest)
    degrees = dict(graph.degree())
    for v in g.vertices:
        if degrees[v] >= 4:
            return g.subgraph([v, *_ordered(g, graph.neighbors(v))[:4]])
    branch = [v for v in g.vertices if degrees[v] >= 3]
    if len(branch) >= 2:
        pairs = [
            (nx.shortest_path_length(graph, a, b), i, j)
            for i, a in enumerate(branch)
            for j, b in enumerate(branch)
            if i < j
        ]
        _, i, j = min(pairs)
        path = nx.shortest_path(graph, branch[i], branch[j])
        keep = list(path)
        for end, inner in ((path[0], path[1]), (path[-1], path[-2])):
            keep += [x for x in _ordered(g, graph.neighbors(end)) if x != inner][:2]
        return g.subgraph(keep)
    if len(branch) == 1:
        centre = branch[0]
        arms = sorted(
            (_arm(graph, centre, v) for v in _ordered(g, graph.neighbors(centre))),
            key=len,
        )
        lengths = tuple(len(a) for a in arms)
        if lengths[0] >= 2:
            take = (2, 2, 2)
        elif lengths[1] >= 3:
            take = (1, 3, 3)
        elif lengths[1] == 2 and lengths[2] >= 5:
            take = (1, 2, 5)
        else:
            return None
        keep = [centre]
        for arm, count in zip(arms, take):
            keep += arm[:count]
        return g.subgraph(keep)
    return None


def contains_euclidean(g: UndirectedGraph) -> EuclideanWitness:
    """Search for a Euclidean subgraph, component by component.

    Raises:
        PreconditionError: The graph has a loop.
    """
    if g.has_loops():
        raise PreconditionError("contains_euclidean requires a loop-free graph")
    graph = g.to_networkx()
    components = sorted(
        (_ordered(g, c) for c in nx.connected_components(graph)),
        key=lambda c: g.vertices.index(c[0]),
    )
    for component in components:
        witness = _component_witness(g.subgraph(component))
        if witness is not None:
            diagram = classify(witness)
            logger.debug(f"Euclidean witness {diagram} in component {component}")
            return EuclideanWitness(True, witness, diagram)
    return EuclideanWitness(False)
