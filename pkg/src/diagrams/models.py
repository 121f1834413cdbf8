"""Undirected diagrams and their classification values."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import networkx as nx

from ..core.errors import QuiverSyntaxError


class DiagramTag(Enum):
    """Families of the diagram catalog."""

    A = "A"
    D = "D"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    A_TILDE = "A~"
    D_TILDE = "D~"
    E6_TILDE = "E~6"
    E7_TILDE = "E~7"
    E8_TILDE = "E~8"
    A_INFINITY = "A_inf"
    D_INFINITY = "D_inf"
    A_INFINITY_INFINITY = "A_inf_inf"
    OTHER = "Other"


DYNKIN_TAGS = frozenset(
    {DiagramTag.A, DiagramTag.D, DiagramTag.E6, DiagramTag.E7, DiagramTag.E8}
)
EUCLIDEAN_TAGS = frozenset(
    {
        DiagramTag.A_TILDE,
        DiagramTag.D_TILDE,
        DiagramTag.E6_TILDE,
        DiagramTag.E7_TILDE,
        DiagramTag.E8_TILDE,
    }
)
INFINITE_TAGS = frozenset(
    {DiagramTag.A_INFINITY, DiagramTag.D_INFINITY, DiagramTag.A_INFINITY_INFINITY}
)

_DISPLAY = {
    DiagramTag.A: "A({n})",
    DiagramTag.D: "D({n})",
    DiagramTag.E6: "E6",
    DiagramTag.E7: "E7",
    DiagramTag.E8: "E8",
    DiagramTag.A_TILDE: "Ã({n})",
    DiagramTag.D_TILDE: "D̃({n})",
    DiagramTag.E6_TILDE: "Ẽ6",
    DiagramTag.E7_TILDE: "Ẽ7",
    DiagramTag.E8_TILDE: "Ẽ8",
    DiagramTag.A_INFINITY: "A∞",
    DiagramTag.D_INFINITY: "D∞",
    DiagramTag.A_INFINITY_INFINITY: "A∞∞",
    DiagramTag.OTHER: "Other",
}


@dataclass(frozen=True)
class DiagramType:
    """Classification value; n is set for the A, D, Ã and D̃ series."""

    tag: DiagramTag
    n: Optional[int] = None
    boundary_open: bool = False

    def __str__(self) -> str:
        text = _DISPLAY[self.tag].format(n=self.n)
        if self.boundary_open:
            return f"{text} (open at window boundary)"
        return text

    @property
    def is_dynkin(self) -> bool:
        return self.tag in DYNKIN_TAGS

    @property
    def is_euclidean(self) -> bool:
        return self.tag in EUCLIDEAN_TAGS

    @property
    def is_infinite(self) -> bool:
        return self.tag in INFINITE_TAGS

    def opened(self) -> DiagramType:
        """Same type, flagged as truncated by a window boundary."""
        return DiagramType(self.tag, self.n, boundary_open=True)


OTHER = DiagramType(DiagramTag.OTHER)


@dataclass(frozen=True)
class UndirectedGraph:
    """Finite undirected multigraph; edges are (u, v, multiplicity)."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...] = ()
    _multiplicity: dict[frozenset[str], int] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise ValueError("duplicate vertex in undirected graph")
        counts: dict[frozenset[str], int] = {}
        for u, v, mult in self.edges:
            if u not in known or v not in known:
                raise ValueError(f"edge {u}-{v} uses an undeclared vertex")
            if mult < 1:
                raise ValueError(f"edge {u}-{v} has multiplicity {mult}")
            key = frozenset((u, v))
            counts[key] = counts.get(key, 0) + mult
        object.__setattr__(self, "_multiplicity", counts)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str] | tuple[str, str, int]],
        vertices: Iterable[str] = (),
    ) -> UndirectedGraph:
        """Build a graph, declaring vertices in first-seen order."""
        order: list[str] = list(dict.fromkeys(vertices))
        normalized: list[tuple[str, str, int]] = []
        for edge in edges:
            u, v = edge[0], edge[1]
            mult = edge[2] if len(edge) == 3 else 1  # type: ignore[misc]
            for x in (u, v):
                if x not in order:
                    order.append(x)
            normalized.append((u, v, mult))
        return cls(tuple(order), tuple(normalized))

    def multiplicity(self, u: str, v: str) -> int:
        return self._multiplicity.get(frozenset((u, v)), 0)

    def has_loops(self) -> bool:
        return any(len(key) == 1 for key in self._multiplicity)

    def neighbors(self, v: str) -> list[str]:
        out = []
        for key in self._multiplicity:
            if v in key and len(key) == 2:
                (other,) = key - {v}
                out.append(other)
        return sorted(out, key=self.vertices.index)

    def to_networkx(self) -> nx.Graph:
        """Simple graph with a `multiplicity` edge attribute."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for key, mult in self._multiplicity.items():
            ends = sorted(key, key=self.vertices.index)
            u, v = (ends[0], ends[0]) if len(ends) == 1 else (ends[0], ends[1])
            g.add_edge(u, v, multiplicity=mult)
        return g

    def subgraph(self, keep: Iterable[str]) -> UndirectedGraph:
        kept = set(keep)
        vertices = tuple(v for v in self.vertices if v in kept)
        edges = tuple(
            (u, v, m) for u, v, m in self.canonical_edges() if u in kept and v in kept
        )
        return UndirectedGraph(vertices, edges)

    def relabel(self, mapping: dict[str, str]) -> UndirectedGraph:
        return UndirectedGraph(
            tuple(mapping[v] for v in self.vertices),
            tuple((mapping[u], mapping[v], m) for u, v, m in self.edges),
        )

    def canonical_edges(self) -> list[tuple[str, str, int]]:
        """One record per vertex pair, ordered by vertex position."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        out = []
        for key, mult in self._multiplicity.items():
            ends = sorted(key, key=pos.__getitem__)
            u, v = ends[0], ends[-1]
            out.append((u, v, mult))
        return sorted(out, key=lambda e: (pos[e[0]], pos[e[1]]))


def parse_graph(text: str) -> UndirectedGraph:
    """Read one edge per line as ``u v [multiplicity]``; ``#`` starts a comment.

    A line holding a single id declares an isolated vertex.

    Raises:
        QuiverSyntaxError: A line has more than three fields or a bad
            multiplicity.
    """
    order: list[str] = []
    edges: list[tuple[str, str, int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        fields = line.split()
        if not fields:
            continue
        column = line.index(fields[0]) + 1
        if len(fields) > 3:
            raise QuiverSyntaxError("expected 'u v [multiplicity]'", number, column)
        order.extend(fields[:2])
        if len(fields) == 1:
            continue
        mult = 1
        if len(fields) == 3:
            if not fields[2].isdigit() or int(fields[2]) < 1:
                raise QuiverSyntaxError(
                    f"bad multiplicity '{fields[2]}'", number, line.index(fields[2]) + 1
                )
            mult = int(fields[2])
        edges.append((fields[0], fields[1], mult))
    return UndirectedGraph.from_edges(edges, order)
