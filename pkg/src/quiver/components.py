"""Connected components of translation-quiver windows."""
from __future__ import annotations

import logging

import networkx as nx

from .models import TranslationQuiver

logger = logging.getLogger(__name__)


def connected_components(tq: TranslationQuiver) -> list[TranslationQuiver]:
    """Split a window along walks using 1-arrows and tau in either direction.

    Components are ordered by their first vertex in the window.
    """
    graph = nx.Graph()
    graph.add_nodes_from(tq.ids)
    graph.add_edges_from((a.source, a.target) for a in tq.arrows)
    graph.add_edges_from(tq.translation)
    pos = {v: i for i, v in enumerate(tq.ids)}
    parts = sorted(
        (sorted(c, key=pos.__getitem__) for c in nx.connected_components(graph)),
        key=lambda c: pos[c[0]],
    )
    components = []
    for i, part in enumerate(parts):
        name = tq.name if len(parts) == 1 else f"{tq.name}#{i}"
        components.append(tq.restrict(part, name=name))
    logger.debug(f"'{tq.name}' has {len(components)} connected components")
    return components
