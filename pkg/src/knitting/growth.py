"""Evidence for bounded or unbounded module lengths along tau-orbits."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..core.errors import PreconditionError
from ..diagrams.classify import contains_euclidean
from ..diagrams.models import DiagramTag, DiagramType
from ..quiver.models import TranslationQuiver
from ..sectional.orbits import tau_orbits
from ..sectional.subgraphs import eligible_subgraph, subgraph_reading

logger = logging.getLogger(__name__)


class GrowthEvidence(Enum):
    BOUNDED = "bounded-evidence"
    GROWING = "growing-evidence"
    UNDETERMINED = "undetermined"


class GrowthRule(Enum):
    CLOSED_COMPONENT = "closed-component"
    DYNKIN_TYPE = "dynkin-subgraph-type"
    MULTIPLE_ARROWS = "multiple-arrows"
    EUCLIDEAN = "euclidean-sectional-subgraph"
    A_INFINITY_INFINITY = "a-infinity-infinity-subgraph"
    NONE = "none"


class LengthTrend(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    CONSTANT = "constant"
    MIXED = "mixed"
    SHORT = "short"


@dataclass(frozen=True)
class OrbitTrend:
    """Lengths along one orbit, listed from its tau end."""

    members: tuple[str, ...]
    lengths: tuple[int, ...]
    trend: LengthTrend
    periodic: bool = False

    def __str__(self) -> str:
        lengths = " ".join(str(n) for n in self.lengths)
        return f"{self.trend.value}: {lengths}"


@dataclass(frozen=True)
class GrowthReport:
    evidence: GrowthEvidence
    rule: GrowthRule
    trends: tuple[OrbitTrend, ...] = ()
    subgraph_type: Optional[DiagramType] = None

    def __str__(self) -> str:
        lines = [f"{self.evidence.value} ({self.rule.value})"]
        if self.subgraph_type is not None:
            lines[0] += f" type {self.subgraph_type}"
        lines += [f"orbit {i + 1} {t}" for i, t in enumerate(self.trends)]
        return "\n".join(lines)


def _trend(lengths: tuple[int, ...]) -> LengthTrend:
    if len(lengths) < 2:
        return LengthTrend.SHORT
    steps = [b - a for a, b in zip(lengths, lengths[1:])]
    if all(d > 0 for d in steps):
        return LengthTrend.INCREASING
    if all(d < 0 for d in steps):
        return LengthTrend.DECREASING
    if all(d == 0 for d in steps):
        return LengthTrend.CONSTANT
    return LengthTrend.MIXED


def _sizes(window: TranslationQuiver) -> dict[str, int]:
    sizes: dict[str, int] = {}
    for v in window.vertices:
        if v.size is None:
            raise PreconditionError(
                f"growth analysis needs lengths or dimension vectors, {v.id} has none"
            )
        sizes[v.id] = v.size
    return sizes


def orbit_length_trend(window: TranslationQuiver) -> list[OrbitTrend]:
    """Per-orbit length sequences in tau^-1 order.

    Raises:
        PreconditionError: A vertex carries neither length nor dimension vector.
    """
    sizes = _sizes(window)
    trends = []
    for orbit in tau_orbits(window).orbits:
        lengths = tuple(sizes[m] for m in orbit.members)
        periodic = orbit.period is not None
        trend = LengthTrend.CONSTANT if periodic else _trend(lengths)
        trends.append(OrbitTrend(orbit.members, lengths, trend, periodic))
    return trends


def growth_analysis(window: TranslationQuiver) -> GrowthReport:
    """Decide which length-growth rule the window witnesses.

    A window closed on every side is a whole finite component and bounded.
    A valued arrow forces unbounded lengths; so does a full sectional
    subgraph containing a Euclidean graph or reading as A∞∞. A Dynkin
    subgraph clear of the boundary bounds the component. Anything else is
    left undetermined, with the in-window trend attached.

    Raises:
        PreconditionError: Lengths are missing.
    """
    trends = tuple(orbit_length_trend(window))
    name = window.name or "window"
    if not any(window.is_boundary(v) for v in window.ids):
        report = GrowthReport(
            GrowthEvidence.BOUNDED, GrowthRule.CLOSED_COMPONENT, trends
        )
    elif any(a.valuation > 1 for a in window.arrows):
        report = GrowthReport(
            GrowthEvidence.GROWING, GrowthRule.MULTIPLE_ARROWS, trends
        )
    else:
        report = _from_subgraph(window, trends)
    logger.info(f"Growth of {name}: {report.evidence.value} ({report.rule.value})")
    return report


def _from_subgraph(
    window: TranslationQuiver, trends: tuple[OrbitTrend, ...]
) -> GrowthReport:
    s = eligible_subgraph(window)
    if s is None:
        return GrowthReport(GrowthEvidence.UNDETERMINED, GrowthRule.NONE, trends)
    reading = subgraph_reading(s)
    graph = s.underlying_graph()
    if reading.is_euclidean or (
        not graph.has_loops() and contains_euclidean(graph).found
    ):
        return GrowthReport(
            GrowthEvidence.GROWING, GrowthRule.EUCLIDEAN, trends, reading
        )
    if reading.tag is DiagramTag.A_INFINITY_INFINITY:
        return GrowthReport(
            GrowthEvidence.GROWING, GrowthRule.A_INFINITY_INFINITY, trends, reading
        )
    if reading.is_dynkin and not reading.boundary_open:
        return GrowthReport(
            GrowthEvidence.BOUNDED, GrowthRule.DYNKIN_TYPE, trends, reading
        )
    return GrowthReport(GrowthEvidence.UNDETERMINED, GrowthRule.NONE, trends, reading)
