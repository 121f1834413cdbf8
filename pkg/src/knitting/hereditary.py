"""Knitting the preprojective (or preinjective) component of a path algebra."""
from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

from ..core.errors import PreconditionError
from ..matrices.coxeter import projective_dims
from ..quiver.models import ARVertex, OneArrow, Quiver, TranslationQuiver
from .mesh import DimVector, MeshCloses, complete_mesh

logger = logging.getLogger(__name__)

DEFAULT_SLICE_CAP = 64


class KnitDirection(Enum):
    RIGHT = "right"
    LEFT = "left"


@dataclass
class KnitFrontier:
    """Mutable state of a rightward knit.

    Every vertex already has all of its predecessors. A vertex leaves the
    frontier once tau^-1 of it is placed or it is found injective.
    """

    vertices: list[ARVertex] = field(default_factory=list)
    arrows: dict[tuple[str, str], int] = field(default_factory=dict)
    translation: list[tuple[str, str]] = field(default_factory=list)
    pending: list[str] = field(default_factory=list)
    resolved: dict[str, bool] = field(default_factory=dict)
    step: int = 0

    def dim(self, vertex_id: str) -> DimVector:
        for v in self.vertices:
            if v.id == vertex_id:
                assert v.dim is not None
                return v.dim
        raise KeyError(vertex_id)

    def preds(self, vertex_id: str) -> list[str]:
        return [s for (s, t) in self.arrows if t == vertex_id]

    def succs(self, vertex_id: str) -> dict[str, int]:
        return {t: a for (s, t), a in self.arrows.items() if s == vertex_id}


def _projective_name(v: str, k: int) -> str:
    return f"P{v}" if k == 0 else f"tau^-{k}(P{v})"


def _injective_name(v: str, k: int) -> str:
    return f"I{v}" if k == 0 else f"tau^{k}(I{v})"


def _require_knittable(q: Quiver) -> None:
    if not q.vertices:
        raise PreconditionError("cannot knit an empty quiver")
    if not q.is_acyclic():
        raise PreconditionError("knitting needs an acyclic quiver without loops")


def _knit_right(
    q: Quiver, slice_cap: int, name: Callable[[str, int], str]
) -> TranslationQuiver:
    dims = projective_dims(q)
    frontier = KnitFrontier()
    origin: dict[str, tuple[str, int]] = {}
    for v in q.vertex_ids:
        vid = name(v, 0)
        origin[vid] = (v, 0)
        frontier.vertices.append(
            ARVertex(id=vid, label=vid, dim=dims[v], projective=True)
        )
        frontier.pending.append(vid)
    for a in q.arrows:
        key = (name(a.target, 0), name(a.source, 0))
        frontier.arrows[key] = frontier.arrows.get(key, 0) + 1

    while frontier.pending and frontier.step + 1 < slice_cap:
        frontier.step += 1
        progressed = False
        for x in list(frontier.pending):
            if any(p not in frontier.resolved for p in frontier.preds(x)):
                continue
            frontier.pending.remove(x)
            progressed = True
            succs = frontier.succs(x)
            try:
                dim = complete_mesh(
                    frontier.dim(x), [(frontier.dim(y), a) for y, a in succs.items()]
                )
            except MeshCloses as closes:
                logger.debug(f"{x} is injective: {closes}")
                frontier.resolved[x] = False
                continue
            v, k = origin[x]
            z = name(v, k + 1)
            origin[z] = (v, k + 1)
            frontier.vertices.append(ARVertex(id=z, label=z, dim=dim))
            for y, a in succs.items():
                frontier.arrows[(y, z)] = a
            frontier.translation.append((z, x))
            frontier.pending.append(z)
            frontier.resolved[x] = True
        if not progressed:
            break

    injective = {x for x, placed in frontier.resolved.items() if not placed}
    vertices = tuple(
        ARVertex(
            id=v.id,
            label=v.label,
            dim=v.dim,
            projective=v.projective,
            ext_injective=v.id in injective,
        )
        for v in frontier.vertices
    )
    window = TranslationQuiver(
        vertices,
        tuple(OneArrow(s, t, a) for (s, t), a in frontier.arrows.items()),
        tuple(frontier.translation),
        metadata={"truncated": True} if frontier.pending else {},
    )
    if frontier.pending:
        logger.warning(
            f"Knitting stopped at the slice cap {slice_cap} with "
            f"{len(frontier.pending)} open vertices"
        )
    return window.canonical()


def knit_hereditary(
    q: Quiver,
    direction: KnitDirection = KnitDirection.RIGHT,
    slice_cap: int = DEFAULT_SLICE_CAP,
) -> TranslationQuiver:
    """Knit from the projectives rightwards or from the injectives leftwards.

    A vertex whose mesh arithmetic goes negative is injective (resp.
    projective) and is not translated further. Dimension vectors of the
    projectives come from path counts. Stops when nothing is left to
    translate or after `slice_cap` slices; a truncated window carries
    `truncated: true` in its metadata and open vertices on its boundary.

    Raises:
        PreconditionError: Empty quiver, loop or oriented cycle.
    """
    _require_knittable(q)
    if slice_cap < 1:
        raise PreconditionError(f"slice cap must be positive, got {slice_cap}")
    if direction is KnitDirection.RIGHT:
        window = _knit_right(q, slice_cap, _projective_name)
    else:
        window = _knit_right(q.opposite(), slice_cap, _injective_name).opposite()
    window = TranslationQuiver(
        window.vertices,
        window.arrows,
        window.translation,
        name=f"knit-{direction.value}",
        metadata=dict(window.metadata),
    ).canonical()
    logger.info(f"Knitted {len(window)} vertices {direction.value}wards")
    return window
