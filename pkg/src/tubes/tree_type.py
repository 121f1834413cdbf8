"""Tree types of stable windows, built from sectional paths."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from ..core.errors import PreconditionError
from ..diagrams.classify import classify, infinite_reading
from ..diagrams.models import DiagramType, UndirectedGraph
from ..quiver.models import TranslationQuiver
from ..sectional.paths import sectional_paths_from
from .zb import DirectedTree

logger = logging.getLogger(__name__)

DEFAULT_TREE_CAP = 12


@dataclass(frozen=True)
class TreeType:
    """Directed tree B with one vertex per sectional path from the base.

    A tree vertex is named after the end of its path. Paths that stop at the
    cap or at the window boundary leave their vertex in `open_vertices`.
    """

    tree: DirectedTree
    open_vertices: tuple[str, ...] = ()

    @property
    def truncated(self) -> bool:
        return bool(self.open_vertices)

    @property
    def graph(self) -> UndirectedGraph:
        return self.tree.underlying_graph()

    @property
    def reading(self) -> DiagramType:
        if self.truncated:
            return infinite_reading(self.graph, self.open_vertices)
        return classify(self.graph)

    def __str__(self) -> str:
        return f"tree type {self.reading} on {len(self.tree.vertices)} vertices"


def _require_stable_translation_quiver(window: TranslationQuiver) -> None:
    for v in window.vertices:
        if v.projective or v.ext_injective:
            raise PreconditionError(
                f"window is not stable: {v.id} is projective or Ext-injective"
            )
    for a in window.arrows:
        if a.source == a.target:
            raise PreconditionError(
                f"not a translation quiver: loop at {a.source}"
            )
        if a.valuation > 1:
            raise PreconditionError(
                f"not a translation quiver: {a.valuation} arrows "
                f"{a.source}->{a.target}"
            )


def tree_type(
    window: TranslationQuiver, base: str, cap: int = DEFAULT_TREE_CAP
) -> TreeType:
    """Build the tree of sectional paths starting at `base`.

    Each path extended by one arrow becomes an arrow of the tree.

    Raises:
        PreconditionError: Projective or Ext-injective vertices, loops or
            multiple arrows.
    """
    _require_stable_translation_quiver(window)
    window.vertex(base)
    names: dict[tuple[str, ...], str] = {}
    used: dict[str, int] = {}
    arrows: list[tuple[str, str]] = []
    open_vertices: list[str] = []
    for path in sectional_paths_from(window, base, cap):
        end = path.end
        used[end] = used.get(end, 0) + 1
        name = end if used[end] == 1 else f"{end}~{used[end] - 1}"
        names[path.vertices] = name
        if path.length:
            arrows.append((names[path.vertices[:-1]], name))
        if path.length == cap or window.is_boundary(end):
            open_vertices.append(name)
    tree = DirectedTree(tuple(names.values()), tuple(arrows), root=base)
    result = TreeType(tree, tuple(open_vertices))
    logger.debug(f"Tree type from {base}: {len(tree.vertices)} paths")
    return result
