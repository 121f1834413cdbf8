"""Quivers, translation-quiver windows and validation findings."""
from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Optional

import networkx as nx

from ..core.errors import InterchangeError, UnknownVertexError
from ..diagrams.models import UndirectedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuiverVertex:
    id: str
    label: str


@dataclass(frozen=True)
class QuiverArrow:
    id: str
    source: str
    target: str
    label: str


@dataclass(frozen=True)
class RelationTerm:
    """Coefficient times a path, arrows listed in traversal order."""

    coefficient: int
    arrows: tuple[str, ...]


@dataclass(frozen=True)
class Relation:
    text: str
    terms: tuple[RelationTerm, ...]


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph presenting a path algebra."""

    vertices: tuple[QuiverVertex, ...]
    arrows: tuple[QuiverArrow, ...] = ()
    relations: tuple[Relation, ...] = ()

    def __post_init__(self) -> None:
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise InterchangeError("duplicate vertex id in quiver")
        arrow_ids = [a.id for a in self.arrows]
        if len(set(arrow_ids)) != len(arrow_ids):
            raise InterchangeError("duplicate arrow id in quiver")
        known = set(ids)
        for arrow in self.arrows:
            for end in (arrow.source, arrow.target):
                if end not in known:
                    raise UnknownVertexError(
                        f"unknown vertex '{end}' in arrow '{arrow.id}'"
                    )

    @property
    def vertex_ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    def arrow(self, arrow_id: str) -> QuiverArrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise UnknownVertexError(f"unknown arrow '{arrow_id}'")

    def multiplicity(self, source: str, target: str) -> int:
        """Number of arrows source -> target."""
        return sum(1 for a in self.arrows if a.source == source and a.target == target)

    def successors(self, v: str) -> list[str]:
        """Targets of arrows out of v, one entry per arrow."""
        return [a.target for a in self.arrows if a.source == v]

    def predecessors(self, v: str) -> list[str]:
        return [a.source for a in self.arrows if a.target == v]

    def has_loops(self) -> bool:
        return any(a.source == a.target for a in self.arrows)

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertex_ids)
        for a in self.arrows:
            g.add_edge(a.source, a.target, key=a.id)
        return g

    def is_acyclic(self) -> bool:
        return not self.has_loops() and nx.is_directed_acyclic_graph(
            self.to_networkx()
        )

    def opposite(self) -> Quiver:
        """Quiver with every arrow reversed; relations are dropped."""
        return Quiver(
            self.vertices,
            tuple(
                QuiverArrow(a.id, a.target, a.source, a.label) for a in self.arrows
            ),
        )

    def underlying_graph(self) -> UndirectedGraph:
        """Undirected graph; edge multiplicity counts arrows both ways."""
        counts: dict[tuple[str, str], int] = {}
        pos = {v: i for i, v in enumerate(self.vertex_ids)}
        for a in self.arrows:
            u, v = sorted((a.source, a.target), key=pos.__getitem__)
            counts[(u, v)] = counts.get((u, v), 0) + 1
        return UndirectedGraph(
            tuple(self.vertex_ids),
            tuple((u, v, m) for (u, v), m in counts.items()),
        )


@dataclass(frozen=True)
class ARVertex:
    """Vertex of a translation-quiver window."""

    id: str
    label: str
    dim: Optional[tuple[int, ...]] = None
    length: Optional[int] = None
    projective: bool = False
    ext_injective: bool = False
    mesh_complete: bool = True

    @property
    def size(self) -> Optional[int]:
        """Length, taken from the dimension vector when not given."""
        if self.length is not None:
            return self.length
        if self.dim is not None:
            return sum(self.dim)
        return None


@dataclass(frozen=True)
class OneArrow:
    source: str
    target: str
    valuation: int = 1


@dataclass(frozen=True)
class TranslationQuiver:
    """Finite window of a translation quiver.

    `translation` maps a vertex z to tau(z). Meshes are checked only where
    `mesh_complete` is set on z.
    """

    vertices: tuple[ARVertex, ...] = ()
    arrows: tuple[OneArrow, ...] = ()
    translation: tuple[tuple[str, str], ...] = ()
    name: str = ""
    metadata: Mapping[str, Any] = field(default_factory=dict, compare=False)
    _index: dict[str, ARVertex] = field(init=False, repr=False, compare=False)
    _preds: dict[str, dict[str, int]] = field(init=False, repr=False, compare=False)
    _succs: dict[str, dict[str, int]] = field(init=False, repr=False, compare=False)
    _tau: dict[str, str] = field(init=False, repr=False, compare=False)
    _tau_inv: dict[str, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index: dict[str, ARVertex] = {}
        for v in self.vertices:
            if v.id in index:
                raise InterchangeError(f"duplicate vertex id '{v.id}'")
            index[v.id] = v
        preds: dict[str, dict[str, int]] = {v: {} for v in index}
        succs: dict[str, dict[str, int]] = {v: {} for v in index}
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in index:
                    raise UnknownVertexError(
                        f"unknown vertex '{end}' in arrow {a.source}->{a.target}"
                    )
            if a.valuation < 1:
                raise InterchangeError(
                    f"arrow {a.source}->{a.target} has valuation {a.valuation}"
                )
            if a.source in preds[a.target]:
                raise InterchangeError(
                    f"duplicate arrow record {a.source}->{a.target}"
                )
            preds[a.target][a.source] = a.valuation
            succs[a.source][a.target] = a.valuation
        tau: dict[str, str] = {}
        tau_inv: dict[str, str] = {}
        for z, t in self.translation:
            for end in (z, t):
                if end not in index:
                    raise UnknownVertexError(f"unknown vertex '{end}' in translation")
            if index[z].projective:
                raise InterchangeError(f"translation defined on projective '{z}'")
            if z in tau:
                raise InterchangeError(f"translation defined twice on '{z}'")
            if t in tau_inv:
                raise InterchangeError(f"translation is not injective at '{t}'")
            tau[z] = t
            tau_inv[t] = z
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_preds", preds)
        object.__setattr__(self, "_succs", succs)
        object.__setattr__(self, "_tau", tau)
        object.__setattr__(self, "_tau_inv", tau_inv)

    def __contains__(self, vertex_id: object) -> bool:
        return vertex_id in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    def vertex(self, vertex_id: str) -> ARVertex:
        try:
            return self._index[vertex_id]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex '{vertex_id}'") from None

    def preds(self, vertex_id: str) -> dict[str, int]:
        """Immediate predecessors with valuations."""
        return dict(self._preds[vertex_id])

    def succs(self, vertex_id: str) -> dict[str, int]:
        return dict(self._succs[vertex_id])

    def valuation(self, source: str, target: str) -> int:
        return self._succs.get(source, {}).get(target, 0)

    def tau(self, vertex_id: str) -> Optional[str]:
        return self._tau.get(vertex_id)

    def tau_inv(self, vertex_id: str) -> Optional[str]:
        return self._tau_inv.get(vertex_id)

    def tau_power(self, vertex_id: str, k: int) -> Optional[str]:
        """tau^k, negative k meaning tau^-1; None once it leaves the window."""
        current: Optional[str] = vertex_id
        step = self.tau if k >= 0 else self.tau_inv
        for _ in range(abs(k)):
            if current is None:
                return None
            current = step(current)
        return current

    def tau_pairs(self) -> list[tuple[str, str]]:
        return list(self.translation)

    def is_boundary(self, vertex_id: str) -> bool:
        """True when the window cuts the vertex's mesh or orbit."""
        v = self._index[vertex_id]
        if not v.mesh_complete:
            return True
        if self.tau(vertex_id) is None and not v.projective:
            return True
        return self.tau_inv(vertex_id) is None and not v.ext_injective

    def interior(self) -> list[str]:
        return [v for v in self.ids if not self.is_boundary(v)]

    def to_networkx(self) -> nx.DiGraph:
        """1-arrows as a digraph with `valuation` on every edge."""
        g = nx.DiGraph()
        for v in self.vertices:
            g.add_node(v.id, label=v.label)
        for a in self.arrows:
            g.add_edge(a.source, a.target, valuation=a.valuation)
        return g

    def underlying_graph(
        self, keep: Optional[Iterable[str]] = None
    ) -> UndirectedGraph:
        """Undirected graph of the 1-arrows; valuations become multiplicities."""
        kept = set(self.ids if keep is None else keep)
        return UndirectedGraph(
            tuple(v for v in self.ids if v in kept),
            tuple(
                (a.source, a.target, a.valuation)
                for a in self.arrows
                if a.source in kept and a.target in kept
            ),
        )

    def restrict(
        self, keep: Iterable[str], name: Optional[str] = None
    ) -> TranslationQuiver:
        """Full subquiver on `keep`; vertices that lose neighbours become open."""
        kept = set(keep)
        vertices = []
        for v in self.vertices:
            if v.id not in kept:
                continue
            lost = any(p not in kept for p in self._preds[v.id])
            t = self.tau(v.id)
            if t is not None and (
                t not in kept or any(s not in kept for s in self._succs[t])
            ):
                lost = True
            vertices.append(replace(v, mesh_complete=v.mesh_complete and not lost))
        return TranslationQuiver(
            tuple(vertices),
            tuple(a for a in self.arrows if a.source in kept and a.target in kept),
            tuple((z, t) for z, t in self.translation if z in kept and t in kept),
            name=self.name if name is None else name,
            metadata=dict(self.metadata),
        )

    def opposite(self) -> TranslationQuiver:
        """Dual window: arrows reversed, tau replaced by tau^-1.

        Projective and Ext-injective flags swap. The mesh flag of a vertex in
        the dual describes the mesh starting at it in the original.
        """
        vertices = []
        for v in self.vertices:
            t_inv = self.tau_inv(v.id)
            if t_inv is not None:
                complete = self._index[t_inv].mesh_complete
            else:
                complete = v.ext_injective and v.mesh_complete
            vertices.append(
                replace(
                    v,
                    projective=v.ext_injective,
                    ext_injective=v.projective,
                    mesh_complete=complete,
                )
            )
        return TranslationQuiver(
            tuple(vertices),
            tuple(OneArrow(a.target, a.source, a.valuation) for a in self.arrows),
            tuple((t, z) for z, t in self.translation),
            name=f"{self.name}^op" if self.name else "",
            metadata=dict(self.metadata),
        )

    def with_vertices(self, vertices: Iterable[ARVertex]) -> TranslationQuiver:
        return replace(self, vertices=tuple(vertices))

    def canonical(self) -> TranslationQuiver:
        """Arrows and tau pairs sorted by the position of their vertices."""
        pos = {v: i for i, v in enumerate(self.ids)}
        return replace(
            self,
            arrows=tuple(
                sorted(self.arrows, key=lambda a: (pos[a.source], pos[a.target]))
            ),
            translation=tuple(sorted(self.translation, key=lambda p: pos[p[0]])),
        )


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


class FindingRule(Enum):
    """Rules checked by validate."""

    MESH = "mesh"
    MISSING_TRANSLATE = "missing_translate"
    ADDITIVITY = "additivity"
    LENGTH = "length"
    DIMENSION = "dimension"
    SECTIONAL_CYCLE = "w1_sectional_cycle"
    LOOP = "w2_loop"
    DEGREE_CYCLE = "degree_cycle"


@dataclass(frozen=True)
class Finding:
    """One violated invariant."""

    severity: Severity
    rule: FindingRule
    ids: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        where = ",".join(self.ids)
        return f"{self.severity.value} [{self.rule.value}] {where}: {self.message}"


@dataclass
class ValidationReport:
    findings: list[Finding] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.findings)

    def __len__(self) -> int:
        return len(self.findings)

    @property
    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity is Severity.ERROR]

    @property
    def warnings(self) -> list[Finding]:
        return [f for f in self.findings if f.severity is Severity.WARNING]

    def rules(self) -> set[FindingRule]:
        return {f.rule for f in self.findings}

    def add(
        self, severity: Severity, rule: FindingRule, ids: Iterable[str], message: str
    ) -> None:
        self.findings.append(Finding(severity, rule, tuple(ids), message))

    def __str__(self) -> str:
        if not self.findings:
            return "OK: no findings"
        return "\n".join(str(f) for f in self.findings)
