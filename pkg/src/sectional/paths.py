"""Paths in translation-quiver windows and their sectional properties."""
from __future__ import annotations

import logging
from collections import Counter, deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Optional

from ..core.errors import PreconditionError
from ..quiver.models import TranslationQuiver

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathInQuiver:
    """X_0 -> X_1 -> ... -> X_n; each step uses the 1-arrow between them."""

    vertices: tuple[str, ...]

    @classmethod
    def of(cls, vertices: Sequence[str]) -> PathInQuiver:
        return cls(tuple(vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> str:
        return self.vertices[0]

    @property
    def end(self) -> str:
        return self.vertices[-1]

    def __str__(self) -> str:
        return " -> ".join(self.vertices)


def check_path(window: TranslationQuiver, path: PathInQuiver) -> None:
    if not path.vertices:
        raise PreconditionError("empty path")
    for v in path.vertices:
        if v not in window:
            raise PreconditionError(f"path vertex {v} is not in the window")
    for a, b in zip(path.vertices, path.vertices[1:]):
        if window.valuation(a, b) == 0:
            raise PreconditionError(f"no arrow {a} -> {b} in the window")


def is_sectional(window: TranslationQuiver, path: PathInQuiver) -> bool:
    """No index i with tau(X_{i+2}) = X_i."""
    check_path(window, path)
    xs = path.vertices
    return all(window.tau(xs[i + 2]) != xs[i] for i in range(len(xs) - 2))


def is_presectional(window: TranslationQuiver, path: PathInQuiver) -> bool:
    """X_{i-2} and tau(X_i) are both middle terms of the mesh ending in X_{i-1}.

    When X_{i-2} = tau(X_i) the arrow into X_{i-1} needs valuation at least 2.
    """
    check_path(window, path)
    xs = path.vertices
    for i in range(2, len(xs)):
        t = window.tau(xs[i])
        if t is None:
            continue
        needed = Counter([xs[i - 2], t])
        preds = window.preds(xs[i - 1])
        if any(preds.get(y, 0) < c for y, c in needed.items()):
            return False
    return True


def sectional_paths_from(
    window: TranslationQuiver, start: str, max_length: int, backwards: bool = False
) -> Iterator[PathInQuiver]:
    """All sectional paths starting at `start` (ending there when backwards).

    Paths are yielded in breadth-first order, successors in window order.
    """
    pos = {v: i for i, v in enumerate(window.ids)}
    queue: deque[tuple[str, ...]] = deque([(start,)])
    while queue:
        walk = queue.popleft()
        yield PathInQuiver(tuple(reversed(walk)) if backwards else walk)
        if len(walk) - 1 >= max_length:
            continue
        step = window.preds if backwards else window.succs
        for nxt in sorted(step(walk[-1]), key=pos.__getitem__):
            if len(walk) >= 2:
                first, last = (nxt, walk[-2]) if backwards else (walk[-2], nxt)
                if window.tau(last) == first:
                    continue
            queue.append(walk + (nxt,))


def shortest_sectional_path(
    window: TranslationQuiver, source: str, target: str, max_length: int
) -> Optional[PathInQuiver]:
    """Breadth-first search over (previous, current) states."""
    if source == target:
        return PathInQuiver((source,))
    pos = {v: i for i, v in enumerate(window.ids)}
    start: tuple[Optional[str], str] = (None, source)
    parent: dict[tuple[Optional[str], str], Optional[tuple[Optional[str], str]]] = {
        start: None
    }
    queue: deque[tuple[tuple[Optional[str], str], int]] = deque([(start, 0)])
    while queue:
        state, depth = queue.popleft()
        if depth >= max_length:
            continue
        prev, cur = state
        for nxt in sorted(window.succs(cur), key=pos.__getitem__):
            if prev is not None and window.tau(nxt) == prev:
                continue
            new = (cur, nxt)
            if new in parent:
                continue
            parent[new] = state
            if nxt == target:
                walk = [nxt]
                back: Optional[tuple[Optional[str], str]] = new
                while back is not None:
                    if back[0] is not None:
                        walk.append(back[0])
                    back = parent[back]
                return PathInQuiver(tuple(reversed(walk)))
            queue.append((new, depth + 1))
    return None
