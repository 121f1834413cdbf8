"""Coray and ray insertions on translation-quiver windows.

Inserting `n` at a coray vertex x = x_1 with coray ... -> x_3 -> x_2 -> x_1
adds vertices (i, j) for i >= 1 and 1 <= j <= n with arrows

    (i + 1, j) -> (i, j)
    (i, j + 1) -> (i + 1, j)          for j < n
    (n + i - 1, 1) -> x_i
    y -> (i, n)                       for every arrow y -> x_i other than
                                      x_{i+1} -> x_i, which is then removed

and the translation tau'(x_i) = (n + i, 1), tau'(i, j) = (i, j + 1) for j < n,
tau'(i, n) = tau(x_i). Everything else is kept. On a window the coray is
read as far as the window reaches, so i runs over 1..L for a coray of L
vertices.
"""
from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, replace

from ..core.errors import (
    NotCorayVertexError,
    PreconditionError,
    WindowTooSmallError,
)
from ..quiver.models import ARVertex, OneArrow, TranslationQuiver
from ..sectional.paths import PathInQuiver, sectional_paths_from

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coray:
    """The coray ending at a coray vertex, read inside a window."""

    vertex: str
    path: PathInQuiver

    @property
    def members(self) -> tuple[str, ...]:
        """x_1, x_2, ... starting at the coray vertex."""
        return tuple(reversed(self.path.vertices))

    def __len__(self) -> int:
        return len(self.path.vertices)


def coray_of(window: TranslationQuiver, x: str) -> Coray:
    """Verify that `x` is a coray vertex and return its coray.

    Every length must carry exactly one sectional path ending at `x`, and the
    longest one must stop at the window boundary rather than inside.

    Raises:
        NotCorayVertexError: A second path of some length, or a finite coray.
    """
    window.vertex(x)
    longest = PathInQuiver((x,))
    for path in sectional_paths_from(window, x, len(window), backwards=True):
        if path.length == longest.length and path != longest:
            raise NotCorayVertexError(
                f"{x} is not a coray vertex: two sectional paths of length "
                f"{path.length} end there"
            )
        longest = path
    if longest.length == 0:
        raise NotCorayVertexError(f"{x} is not a coray vertex: no arrow ends there")
    if not window.is_boundary(longest.start):
        raise NotCorayVertexError(
            f"{x} is not a coray vertex: its coray stops at {longest.start} "
            f"inside the window"
        )
    return Coray(x, longest)


def is_coray_vertex(window: TranslationQuiver, x: str) -> bool:
    try:
        coray_of(window, x)
    except NotCorayVertexError:
        return False
    return True


def inserted_id(x: str, i: int, j: int) -> str:
    return f"{x}+({i},{j})"


def coray_insertion(
    window: TranslationQuiver, x: str, n: int
) -> TranslationQuiver:
    """Insert `n` at the coray vertex `x`.

    Raises:
        NotCorayVertexError: `x` fails the coray check.
        WindowTooSmallError: The coray is too short to place tau'(x_1).
        PreconditionError: n < 1.
    """
    if n < 1:
        raise PreconditionError(f"insertion size must be positive, got {n}")
    coray = coray_of(window, x)
    xs = coray.members
    length = len(xs)
    if length < n + 1:
        raise WindowTooSmallError(
            f"coray of {x} has {length} vertices in the window; inserting {n} "
            f"needs at least {n + 1}"
        )
    index = {v: i for i, v in enumerate(xs, start=1)}

    def new(i: int, j: int) -> str:
        return inserted_id(x, i, j)

    redirected: list[tuple[str, int, int]] = []
    arrows: list[OneArrow] = []
    for a in window.arrows:
        i = index.get(a.target)
        if i is not None and not (i < length and a.source == xs[i]):
            redirected.append((a.source, i, a.valuation))
            continue
        arrows.append(a)
    for i in range(1, length + 1):
        for j in range(1, n + 1):
            if i < length:
                arrows.append(OneArrow(new(i + 1, j), new(i, j)))
            if j < n and i < length:
                arrows.append(OneArrow(new(i, j + 1), new(i + 1, j)))
        if n + i - 1 <= length:
            arrows.append(OneArrow(new(n + i - 1, 1), xs[i - 1]))
    for y, i, valuation in redirected:
        arrows.append(OneArrow(y, new(i, n), valuation))

    translation: list[tuple[str, str]] = [
        (z, t) for z, t in window.translation if z not in index
    ]
    for i, xi in enumerate(xs, start=1):
        if n + i <= length:
            translation.append((xi, new(n + i, 1)))
        for j in range(1, n):
            translation.append((new(i, j), new(i, j + 1)))
        t = window.tau(xi)
        if t is not None:
            translation.append((new(i, n), t))

    vertices: list[ARVertex] = []
    for v in window.vertices:
        i = index.get(v.id)
        if i is None:
            vertices.append(v)
            continue
        complete = v.mesh_complete and i < length and n + i <= length
        vertices.append(replace(v, mesh_complete=complete))
    for i in range(1, length + 1):
        for j in range(1, n + 1):
            complete = i < length and (
                j < n or window.vertex(xs[i - 1]).mesh_complete
            )
            vertices.append(
                ARVertex(
                    id=new(i, j),
                    label=new(i, j),
                    ext_injective=j == 1 and i <= n,
                    mesh_complete=complete,
                )
            )

    result = TranslationQuiver(
        tuple(vertices),
        tuple(arrows),
        tuple(translation),
        name=f"{window.name}[{x},{n}]",
        metadata=dict(window.metadata),
    )
    result = _close_flags(result).canonical()
    logger.info(
        f"Inserted {n} at coray vertex {x}: {len(window)} -> {len(result)} vertices"
    )
    return result


def _close_flags(window: TranslationQuiver) -> TranslationQuiver:
    """Clear the mesh flag wherever the window no longer shows the full mesh."""
    vertices = []
    for v in window.vertices:
        t = window.tau(v.id)
        if v.mesh_complete and not v.projective and (
            t is None or Counter(window.preds(v.id)) != Counter(window.succs(t))
        ):
            logger.warning(f"Mesh at {v.id} is cut by the window after insertion")
            v = replace(v, mesh_complete=False)
        vertices.append(v)
    return window.with_vertices(vertices)


def ray_insertion(window: TranslationQuiver, x: str, n: int) -> TranslationQuiver:
    """Dual of coray_insertion: reverse, insert at the coray, reverse back."""
    inserted = coray_insertion(window.opposite(), x, n).opposite()
    return replace(inserted, name=f"{window.name}[{n},{x}]")


def insert_many(
    window: TranslationQuiver, steps: Iterable[tuple[str, int]], ray: bool = False
) -> TranslationQuiver:
    """Fold insertions; each vertex is re-checked on the quiver built so far."""
    insert = ray_insertion if ray else coray_insertion
    for x, n in steps:
        window = insert(window, x, n)
    return window
