"""Finite windows of stable tubes ZA∞/τ^r."""
from __future__ import annotations

import logging

from ..core.errors import PreconditionError
from ..quiver.models import ARVertex, OneArrow, TranslationQuiver

logger = logging.getLogger(__name__)


def tube_id(a: int, j: int) -> str:
    """Vertex of orbit index `a` and quasi-length `j`."""
    return f"t{a}_{j}"


def stable_tube(rank: int, height: int) -> TranslationQuiver:
    """Stable tube of rank `rank` cut above quasi-length `height`.

    The mouth is quasi-length 1. Corays run t{a}_H -> ... -> t{a}_1 and the
    up arrows are t{a}_j -> t{a-1}_{j+1}; tau(t{a}_j) = t{a+1}_j. The top row
    is flagged mesh-incomplete.

    Raises:
        PreconditionError: Non-positive rank or height.
    """
    if rank < 1 or height < 1:
        raise PreconditionError(
            f"stable tube needs rank and height >= 1, got {rank} and {height}"
        )
    vertices = [
        ARVertex(
            id=tube_id(a, j),
            label=tube_id(a, j),
            mesh_complete=j < height,
        )
        for j in range(1, height + 1)
        for a in range(rank)
    ]
    arrows: list[OneArrow] = []
    for j in range(1, height):
        for a in range(rank):
            arrows.append(OneArrow(tube_id(a, j + 1), tube_id(a, j)))
            arrows.append(OneArrow(tube_id(a, j), tube_id((a - 1) % rank, j + 1)))
    translation = tuple(
        (tube_id(a, j), tube_id((a + 1) % rank, j))
        for j in range(1, height + 1)
        for a in range(rank)
    )
    window = TranslationQuiver(
        tuple(vertices),
        tuple(arrows),
        translation,
        name=f"tube(r={rank},H={height})",
    ).canonical()
    logger.info(f"Built stable tube of rank {rank} with {len(window)} vertices")
    return window


def mouth(window: TranslationQuiver) -> list[str]:
    """Vertices with a single predecessor and a single successor."""
    return [
        v
        for v in window.ids
        if len(window.preds(v)) == 1
        and len(window.succs(v)) == 1
        and window.vertex(v).mesh_complete
    ]
