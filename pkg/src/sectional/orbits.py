"""tau-orbits of a window and their stability classes."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..quiver.models import TranslationQuiver

logger = logging.getLogger(__name__)


class OrbitClass(Enum):
    PERIODIC = "periodic"
    FINITE = "finite"
    LEFT_STABLE = "left-stable-only"
    RIGHT_STABLE = "right-stable-only"
    STABLE_NONPERIODIC = "stable-nonperiodic"
    UNDETERMINED = "window-undetermined"


@dataclass(frozen=True)
class Orbit:
    """Members listed from the tau end: each is tau^-1 of the previous one."""

    members: tuple[str, ...]
    cls: OrbitClass
    period: Optional[int] = None

    def __str__(self) -> str:
        return f"[{self.cls.value}] {' '.join(self.members)}"


@dataclass(frozen=True)
class OrbitGraph:
    orbits: tuple[Orbit, ...]
    adjacency: tuple[tuple[int, int], ...]

    def orbit_of(self, vertex_id: str) -> int:
        for i, orbit in enumerate(self.orbits):
            if vertex_id in orbit.members:
                return i
        raise KeyError(vertex_id)

    def __str__(self) -> str:
        lines = [f"orbit {i + 1} {orbit}" for i, orbit in enumerate(self.orbits)]
        lines += [f"adjacent {i + 1} {j + 1}" for i, j in self.adjacency]
        return "\n".join(lines)


def _classify_chain(
    window: TranslationQuiver, members: list[str], assume_continuation: bool
) -> OrbitClass:
    left_closed = window.vertex(members[0]).projective
    right_closed = window.vertex(members[-1]).ext_injective
    if left_closed and right_closed:
        return OrbitClass.FINITE
    if not assume_continuation:
        return OrbitClass.UNDETERMINED
    if right_closed:
        return OrbitClass.LEFT_STABLE
    if left_closed:
        return OrbitClass.RIGHT_STABLE
    return OrbitClass.STABLE_NONPERIODIC


def tau_orbits(
    window: TranslationQuiver, assume_continuation: bool = False
) -> OrbitGraph:
    """Partition the window into tau-orbits.

    An orbit ends on the left at a projective vertex and on the right at an
    Ext-injective one; any other end is cut by the window. Cut orbits are
    window-undetermined unless `assume_continuation` reads the cut ends as
    continuing without projective or Ext-injective vertices.
    """
    seen: set[str] = set()
    orbits: list[Orbit] = []
    for v in window.ids:
        if v in seen:
            continue
        first = v
        periodic = False
        while True:
            t = window.tau(first)
            if t is None:
                break
            if t == v:
                periodic = True
                break
            first = t
        if periodic:
            first = v
        members = [first]
        current = window.tau_inv(first)
        while current is not None and current != first:
            members.append(current)
            current = window.tau_inv(current)
        seen.update(members)
        if periodic:
            orbits.append(Orbit(tuple(members), OrbitClass.PERIODIC, len(members)))
        else:
            cls = _classify_chain(window, members, assume_continuation)
            orbits.append(Orbit(tuple(members), cls))
    index = {m: i for i, orbit in enumerate(orbits) for m in orbit.members}
    adjacent: set[tuple[int, int]] = set()
    for a in window.arrows:
        i, j = index[a.source], index[a.target]
        if i != j:
            adjacent.add((min(i, j), max(i, j)))
    logger.debug(f"{len(orbits)} tau-orbits in window '{window.name}'")
    return OrbitGraph(tuple(orbits), tuple(sorted(adjacent)))
