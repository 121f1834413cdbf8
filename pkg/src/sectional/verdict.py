"""Finiteness verdicts for the components of a translation-quiver window."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..diagrams.classify import contains_euclidean
from ..diagrams.models import DiagramTag, DiagramType
from ..quiver.components import connected_components
from ..quiver.models import TranslationQuiver
from .subgraphs import eligible_subgraph, is_helical, subgraph_reading

logger = logging.getLogger(__name__)


class Verdict(Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    UNDETERMINED = "undetermined-at-window"


class VerdictRule(Enum):
    CLOSED_COMPONENT = "closed-component"
    DYNKIN_TYPE = "dynkin-subgraph-type"
    MULTIPLE_ARROWS = "multiple-arrows"
    EUCLIDEAN = "euclidean-sectional-subgraph"
    A_INFINITY_INFINITY = "a-infinity-infinity-subgraph"
    HELICAL = "helical-a-infinity"
    NONE = "none"


@dataclass(frozen=True)
class ComponentVerdict:
    component: str
    verdict: Verdict
    rule: VerdictRule
    subgraph_type: Optional[DiagramType] = None

    def __str__(self) -> str:
        text = f"{self.component}: {self.verdict.value} ({self.rule.value})"
        if self.subgraph_type is not None:
            text += f" type {self.subgraph_type}"
        return text


def _from_type(
    name: str, s_type: DiagramType, graph_has_euclidean: bool
) -> ComponentVerdict:
    if s_type.is_dynkin and not s_type.boundary_open:
        return ComponentVerdict(name, Verdict.FINITE, VerdictRule.DYNKIN_TYPE, s_type)
    if s_type.is_euclidean or graph_has_euclidean:
        return ComponentVerdict(name, Verdict.INFINITE, VerdictRule.EUCLIDEAN, s_type)
    if s_type.tag is DiagramTag.A_INFINITY_INFINITY:
        return ComponentVerdict(
            name, Verdict.INFINITE, VerdictRule.A_INFINITY_INFINITY, s_type
        )
    return ComponentVerdict(name, Verdict.UNDETERMINED, VerdictRule.NONE, s_type)


def _closed_verdict(name: str, component: TranslationQuiver) -> ComponentVerdict:
    stable = not any(
        v.projective or v.ext_injective for v in component.vertices
    )
    if stable:
        s = eligible_subgraph(component)
        if s is not None:
            s_type = subgraph_reading(s)
            if s_type.is_dynkin:
                return ComponentVerdict(
                    name, Verdict.FINITE, VerdictRule.DYNKIN_TYPE, s_type
                )
    return ComponentVerdict(name, Verdict.FINITE, VerdictRule.CLOSED_COMPONENT)


def component_verdict(component: TranslationQuiver) -> ComponentVerdict:
    """Apply the finiteness rules to one connected window.

    Rules, in order: a window with no boundary is the whole component; a
    valued arrow forces infinity; a helical left-stable component is
    infinite; otherwise the type of a full sectional subgraph clear of
    Ext-injective vertices (projective ones for right-stable windows) decides.
    """
    name = component.name or "component"
    if not any(component.is_boundary(v) for v in component.ids):
        return _closed_verdict(name, component)
    if any(a.valuation > 1 for a in component.arrows):
        return ComponentVerdict(name, Verdict.INFINITE, VerdictRule.MULTIPLE_ARROWS)
    left_stable = not any(v.projective for v in component.vertices)
    right_stable = not any(v.ext_injective for v in component.vertices)
    if left_stable and is_helical(component):
        return ComponentVerdict(
            name,
            Verdict.INFINITE,
            VerdictRule.HELICAL,
            DiagramType(DiagramTag.A_INFINITY),
        )
    if right_stable and not left_stable:
        side = component.opposite()
    else:
        side = component
    s = eligible_subgraph(side)
    if s is None:
        return ComponentVerdict(name, Verdict.UNDETERMINED, VerdictRule.NONE)
    graph = s.underlying_graph()
    found = not graph.has_loops() and contains_euclidean(graph).found
    return _from_type(name, subgraph_reading(s), found)


def finiteness_verdict(ar: TranslationQuiver) -> list[ComponentVerdict]:
    verdicts = [component_verdict(c) for c in connected_components(ar)]
    for v in verdicts:
        logger.info(f"{v}")
    return verdicts
