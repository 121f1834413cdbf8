"""Recognition of stable tubes and coray/ray tubes inside windows."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import groupby
from math import gcd
from typing import Optional

import networkx as nx
from networkx.algorithms.isomorphism import (
    categorical_multiedge_match,
    categorical_node_match,
)

from ..quiver.models import TranslationQuiver
from ..sectional.paths import sectional_paths_from
from ..sectional.subgraphs import is_cohelical, is_helical
from .stable import stable_tube

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TubeParams:
    """Rank of the underlying tube and the sizes of the insertions."""

    rank: int
    insertions: tuple[int, ...] = ()
    ray: bool = False

    def __str__(self) -> str:
        base = f"(ZA_inf/tau^{self.rank})"
        if not self.insertions:
            return f"stable tube of rank {self.rank}"
        sizes = ", ".join(str(n) for n in self.insertions)
        kind = "ray" if self.ray else "coray"
        return f"{kind} tube {base}[{sizes}]"


def _shape(window: TranslationQuiver) -> nx.MultiDiGraph:
    g = nx.MultiDiGraph()
    for v in window.vertices:
        g.add_node(v.id, complete=v.mesh_complete)
    for a in window.arrows:
        g.add_edge(a.source, a.target, kind=f"arrow{a.valuation}")
    for z, t in window.translation:
        g.add_edge(z, t, kind="tau")
    return g


def same_shape(first: TranslationQuiver, second: TranslationQuiver) -> bool:
    """Isomorphism respecting arrows, tau and mesh flags."""
    if len(first) != len(second) or len(first.arrows) != len(second.arrows):
        return False
    return bool(
        nx.is_isomorphic(
            _shape(first),
            _shape(second),
            node_match=categorical_node_match("complete", True),
            edge_match=categorical_multiedge_match("kind", None),
        )
    )


def _tau_period(window: TranslationQuiver, v: str) -> Optional[int]:
    current = window.tau(v)
    for k in range(1, len(window) + 1):
        if current is None:
            return None
        if current == v:
            return k
        current = window.tau(current)
    return None


def _stable_rank(window: TranslationQuiver) -> Optional[TubeParams]:
    if not any(window.is_boundary(v) for v in window.ids):
        logger.debug(f"{window.name} is closed, so it is no tube")
        return None
    rank = 0
    for v in window.ids:
        period = _tau_period(window, v)
        if period is None:
            return None
        rank = period if rank == 0 else rank * period // gcd(rank, period)
    if rank == 0 or len(window) % rank:
        return None
    if not same_shape(window, stable_tube(rank, len(window) // rank)):
        return None
    return TubeParams(rank)


def _orbit_positions(window: TranslationQuiver) -> Optional[dict[str, tuple[int, int]]]:
    """(orbit, steps from its Ext-injective) for every vertex."""
    positions: dict[str, tuple[int, int]] = {}
    starts = [v.id for v in window.vertices if v.ext_injective]
    for k, start in enumerate(starts):
        current: Optional[str] = start
        step = 0
        while current is not None and current not in positions:
            positions[current] = (k, step)
            current = window.tau(current)
            step += 1
    if len(positions) != len(window):
        return None
    return positions


def _coray_params(window: TranslationQuiver) -> Optional[TubeParams]:
    """Read the parameters off an infinite sectional path.

    With s orbits, a path ... -> tau^r(X_1) -> X_s -> ... -> X_1 through all
    of them and X_j = tau^{n_j}(I_j) gives rank r - s and insertion sizes
    equal to the lengths of the runs of equal n_j.
    """
    positions = _orbit_positions(window)
    if positions is None:
        return None
    s = len({k for k, _ in positions.values()})
    for end in window.ids:
        for path in sectional_paths_from(window, end, s, backwards=True):
            if path.length != s:
                continue
            xs = list(reversed(path.vertices))
            orbits = [positions[x][0] for x in xs]
            if len(set(orbits[:s])) != s or orbits[s] != orbits[0]:
                continue
            steps = [positions[x][1] for x in xs]
            rank = steps[s] - steps[0] - s
            offsets = steps[:s]
            if rank < 1 or offsets != sorted(offsets):
                continue
            runs = tuple(len(list(group)) for _, group in groupby(offsets))
            logger.debug(f"Coray parameters read along {path}")
            return TubeParams(rank, runs)
    return None


def recognize_tube(window: TranslationQuiver) -> Optional[TubeParams]:
    """Stable tube, coray tube or ray tube parameters, or None."""
    projective = any(v.projective for v in window.vertices)
    injective = any(v.ext_injective for v in window.vertices)
    if not projective and not injective:
        params = _stable_rank(window)
    elif not projective and is_helical(window):
        params = _coray_params(window)
    elif not injective and is_cohelical(window):
        dual = _coray_params(window.opposite())
        params = None if dual is None else TubeParams(dual.rank, dual.insertions, True)
    else:
        params = None
    if params is None:
        logger.info(f"{window.name or 'window'} is not recognised as a tube")
    else:
        logger.info(f"{window.name or 'window'} recognised as {params}")
    return params
