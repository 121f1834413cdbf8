"""Oriented cycles whose arrows all claim infinite degree on one side."""
from __future__ import annotations

import logging

import networkx as nx

from ..quiver.models import FindingRule, Severity, TranslationQuiver, ValidationReport
from .infer import DEFAULT_PATH_CAP, infer_degrees
from .models import DegreeKind, Side

logger = logging.getLogger(__name__)

DEFAULT_CYCLE_CAP = 8


def oriented_cycles(window: TranslationQuiver, cap: int) -> list[list[str]]:
    graph = window.to_networkx()
    cycles = [c for c in nx.simple_cycles(graph, length_bound=cap) if len(c) > 1]
    return sorted(cycles, key=lambda c: (len(c), c))


def cycle_degree_consistency(
    window: TranslationQuiver,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    path_cap: int = DEFAULT_PATH_CAP,
) -> ValidationReport:
    """Flag oriented cycles on which no arrow has finite left (or right) degree.

    Every oriented cycle carries an arrow of finite left degree and one of
    finite right degree, so such a cycle points at a corrupt window or a
    wrong infinite-path declaration.
    """
    report = ValidationReport()
    cycles = oriented_cycles(window, cycle_cap)
    if not cycles:
        return report
    for side in (Side.LEFT, Side.RIGHT):
        infinite = {
            (b.source, b.target)
            for b in infer_degrees(window, side, path_cap)
            if b.kind is DegreeKind.INFINITE
        }
        for cycle in cycles:
            arrows = list(zip(cycle, cycle[1:] + cycle[:1]))
            if all(a in infinite for a in arrows):
                report.add(
                    Severity.ERROR,
                    FindingRule.DEGREE_CYCLE,
                    cycle,
                    f"every arrow on the cycle has certified infinite "
                    f"{side.value} degree",
                )
    logger.info(
        f"Checked {len(cycles)} oriented cycles of '{window.name}': "
        f"{len(report)} contradictions"
    )
    return report
