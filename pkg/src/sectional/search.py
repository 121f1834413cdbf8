"""Searches for paths between tau-translates of two vertices."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from ..quiver.models import TranslationQuiver
from .paths import PathInQuiver, is_sectional, shortest_sectional_path

logger = logging.getLogger(__name__)

_PATH_SAMPLE = 64


@dataclass(frozen=True)
class TauShiftedPath:
    """A path from tau^n(X) to Y."""

    n: int
    path: PathInQuiver
    sectional: bool

    def __str__(self) -> str:
        kind = "sectional" if self.sectional else "non-sectional"
        return f"n = {self.n}: {self.path} ({kind})"


def _shifts(limit: int) -> list[int]:
    out = [0]
    for i in range(1, limit + 1):
        out += [i, -i]
    return out


def find_tau_shifted_path(
    window: TranslationQuiver, x: str, y: str
) -> Optional[TauShiftedPath]:
    """Minimal |n| (positive first), then a shortest path, sectional if any."""
    window.vertex(x)
    window.vertex(y)
    g = window.to_networkx()
    for n in _shifts(len(window)):
        source = window.tau_power(x, n)
        if source is None:
            continue
        if not nx.has_path(g, source, y):
            continue
        candidates = itertools.islice(
            nx.all_shortest_paths(g, source, y), _PATH_SAMPLE
        )
        paths = [PathInQuiver(tuple(p)) for p in candidates]
        for p in paths:
            if is_sectional(window, p):
                return TauShiftedPath(n, p, True)
        return TauShiftedPath(n, paths[0], False)
    return None


def distance(
    window: TranslationQuiver, x: str, y: str, max_length: int = 12
) -> Optional[int]:
    """Minimal n + l with a sectional path of length n from tau^-l(X) to Y."""
    best: Optional[int] = None
    shift = 0
    source: Optional[str] = x
    while source is not None and (best is None or shift < best):
        path = shortest_sectional_path(window, source, y, max_length)
        if path is not None and (best is None or path.length + shift < best):
            best = path.length + shift
        source = window.tau_inv(source)
        shift += 1
        if source == x:
            break
    return best
