"""Coxeter matrices of acyclic quivers.

Columns p_j and i_j are the dimension vectors of the indecomposable projective
and injective modules of the path algebra: p_j counts paths starting at e_j,
i_j counts paths ending at e_j. The Coxeter matrix C satisfies C i_j = -p_j.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx
from sympy import ImmutableMatrix

from ..core.errors import PreconditionError
from ..quiver.models import Quiver, QuiverArrow, QuiverVertex, TranslationQuiver

logger = logging.getLogger(__name__)


def _require_acyclic(q: Quiver) -> None:
    if not q.is_acyclic():
        raise PreconditionError("quiver has an oriented cycle or a loop")


def path_counts(q: Quiver) -> list[list[int]]:
    """counts[i][j] = number of paths e_i -> e_j, trivial paths included."""
    _require_acyclic(q)
    ids = q.vertex_ids
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    counts = [[0] * n for _ in range(n)]
    order = list(nx.topological_sort(q.to_networkx()))
    for source in ids:
        row = counts[pos[source]]
        row[pos[source]] = 1
        for v in order:
            if row[pos[v]] == 0:
                continue
            for w in q.successors(v):
                row[pos[w]] += row[pos[v]]
    return counts


def projective_dims(q: Quiver) -> dict[str, tuple[int, ...]]:
    counts = path_counts(q)
    return {v: tuple(counts[j]) for j, v in enumerate(q.vertex_ids)}


def injective_dims(q: Quiver) -> dict[str, tuple[int, ...]]:
    counts = path_counts(q)
    n = len(counts)
    return {
        v: tuple(counts[i][j] for i in range(n))
        for j, v in enumerate(q.vertex_ids)
    }


@dataclass(frozen=True)
class CoxeterMatrices:
    coxeter: ImmutableMatrix
    inverse: ImmutableMatrix


def coxeter(q: Quiver) -> CoxeterMatrices:
    """C with C i_j = -p_j, and C^-1 with C^-1 p_j = -i_j.

    Raises:
        PreconditionError: The quiver has a loop or an oriented cycle.
    """
    if not q.vertices:
        raise PreconditionError("quiver has no vertices")
    counts = ImmutableMatrix(path_counts(q))
    injectives = counts
    projectives = counts.T
    c = -projectives * injectives.inv()
    c_inv = -injectives * projectives.inv()
    logger.debug(f"Coxeter matrix of {len(q.vertices)}-vertex quiver computed")
    return CoxeterMatrices(ImmutableMatrix(c), ImmutableMatrix(c_inv))


def inverse_coxeter_combinatorial(q: Quiver) -> ImmutableMatrix:
    """C^-1 by path counting alone.

    c_ij = -#paths(e_i -> e_j) + sum over arrows e_j -> e_k of #paths(e_i -> e_k).
    """
    counts = path_counts(q)
    ids = q.vertex_ids
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    entries = [[0] * n for _ in range(n)]
    for i in range(n):
        for j, ej in enumerate(ids):
            value = -counts[i][j]
            for ek in q.successors(ej):
                value += counts[i][pos[ek]]
            entries[i][j] = value
    return ImmutableMatrix(n, n, lambda i, j: entries[i][j])


def coxeter_combinatorial(q: Quiver) -> ImmutableMatrix:
    """C by path counting: d_ij = -#paths(e_j -> e_i) + sum over e_k -> e_j."""
    counts = path_counts(q)
    ids = q.vertex_ids
    pos = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    entries = [[0] * n for _ in range(n)]
    for i in range(n):
        for j, ej in enumerate(ids):
            value = -counts[j][i]
            for ek in q.predecessors(ej):
                value += counts[pos[ek]][i]
            entries[i][j] = value
    return ImmutableMatrix(n, n, lambda i, j: entries[i][j])


def slice_quiver(window: TranslationQuiver, sigma: Sequence[str]) -> Quiver:
    """The subquiver of the window on sigma, one arrow per unit of valuation."""
    chosen = set(sigma)
    arrows = []
    for a in window.arrows:
        if a.source in chosen and a.target in chosen:
            for k in range(a.valuation):
                arrows.append(
                    QuiverArrow(f"{a.source}->{a.target}#{k}", a.source, a.target, "")
                )
    vertices = tuple(QuiverVertex(v, window.vertex(v).label) for v in sigma)
    return Quiver(vertices, tuple(arrows))
