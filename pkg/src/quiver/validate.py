"""Invariant checks for translation-quiver windows."""
from __future__ import annotations

import logging
from collections import Counter

import networkx as nx

from .models import FindingRule, Severity, TranslationQuiver, ValidationReport

logger = logging.getLogger(__name__)

DEFAULT_CYCLE_CAP = 12


def _check_mesh(tq: TranslationQuiver, z: str, report: ValidationReport) -> None:
    vertex = tq.vertex(z)
    t = tq.tau(z)
    if t is None:
        # tau(z) outside the window: the mesh cannot be checked here
        if not vertex.projective:
            report.add(
                Severity.WARNING,
                FindingRule.MISSING_TRANSLATE,
                [z],
                "mesh marked complete but tau of the vertex lies outside the "
                "window; mesh not checked",
            )
        return
    preds = Counter(tq.preds(z))
    succs = Counter(tq.succs(t))
    if preds != succs:
        report.add(
            Severity.ERROR,
            FindingRule.MESH,
            [t, z],
            f"predecessors of {z} {dict(sorted(preds.items()))} differ from "
            f"successors of tau({z})={t} {dict(sorted(succs.items()))}",
        )
        return
    _check_additivity(tq, z, t, report)


def _check_additivity(
    tq: TranslationQuiver, z: str, t: str, report: ValidationReport
) -> None:
    members = [z, t, *tq.preds(z)]
    dims = [tq.vertex(m).dim for m in members]
    if all(d is not None for d in dims):
        width = {len(d) for d in dims if d is not None}
        if len(width) != 1:
            report.add(
                Severity.ERROR,
                FindingRule.DIMENSION,
                members,
                "dimension vectors in the mesh have different sizes",
            )
            return
        n = width.pop()
        dim_z, dim_t = tq.vertex(z).dim, tq.vertex(t).dim
        assert dim_z is not None and dim_t is not None
        left = [dim_z[i] + dim_t[i] for i in range(n)]
        right = [0] * n
        for y, a in tq.preds(z).items():
            dim_y = tq.vertex(y).dim
            assert dim_y is not None
            for i in range(n):
                right[i] += a * dim_y[i]
        if left != right:
            report.add(
                Severity.ERROR,
                FindingRule.ADDITIVITY,
                members,
                f"dim tau({z}) + dim {z} = {tuple(left)} but the middle terms "
                f"sum to {tuple(right)}",
            )
        return
    sizes = [tq.vertex(m).size for m in members]
    if all(s is not None for s in sizes):
        total = sum(a * (tq.vertex(y).size or 0) for y, a in tq.preds(z).items())
        left_len = (tq.vertex(z).size or 0) + (tq.vertex(t).size or 0)
        if left_len != total:
            report.add(
                Severity.ERROR,
                FindingRule.ADDITIVITY,
                members,
                f"l(tau({z})) + l({z}) = {left_len} but the middle terms "
                f"have total length {total}",
            )


def is_sectional_cycle(tq: TranslationQuiver, cycle: list[str]) -> bool:
    """No tau(X_{i+2}) = X_i anywhere around the closed walk."""
    m = len(cycle)
    return all(tq.tau(cycle[(i + 2) % m]) != cycle[i] for i in range(m))


def sectional_cycles(tq: TranslationQuiver, cap: int) -> list[list[str]]:
    graph = nx.DiGraph()
    graph.add_nodes_from(tq.ids)
    graph.add_edges_from(
        (a.source, a.target) for a in tq.arrows if a.source != a.target
    )
    found = []
    for cycle in nx.simple_cycles(graph, length_bound=cap):
        if is_sectional_cycle(tq, cycle):
            found.append(cycle)
    return sorted(found, key=lambda c: (len(c), c))


def validate(
    tq: TranslationQuiver, cycle_cap: int = DEFAULT_CYCLE_CAP
) -> ValidationReport:
    """Check every invariant that the window can witness.

    Errors cover mesh shape, additivity and length. Warnings cover sectional
    cycles without a projective or Ext-injective vertex (w1), and loops on
    vertices that are neither projective nor Ext-injective and not fixed by
    tau (w2). A complete mesh whose translate lies outside the window is
    reported as a warning and left unchecked.
    """
    report = ValidationReport()

    for v in tq.vertices:
        if v.dim is not None and v.length is not None and sum(v.dim) != v.length:
            report.add(
                Severity.ERROR,
                FindingRule.LENGTH,
                [v.id],
                f"length {v.length} differs from dimension vector sum {sum(v.dim)}",
            )

    for v in tq.vertices:
        if v.mesh_complete:
            _check_mesh(tq, v.id, report)

    for cycle in sectional_cycles(tq, cycle_cap):
        if len(cycle) < 2:
            continue
        if not any(
            tq.vertex(x).projective or tq.vertex(x).ext_injective for x in cycle
        ):
            report.add(
                Severity.WARNING,
                FindingRule.SECTIONAL_CYCLE,
                cycle,
                "sectional cycle without projective or Ext-injective vertex",
            )

    for a in tq.arrows:
        if a.source != a.target:
            continue
        v = tq.vertex(a.source)
        if v.projective or v.ext_injective or tq.tau(v.id) == v.id:
            continue
        report.add(
            Severity.WARNING,
            FindingRule.LOOP,
            [v.id],
            "loop on a vertex that is neither projective nor Ext-injective "
            "and not fixed by tau",
        )

    if report:
        logger.info(
            f"Validation of '{tq.name}': {len(report.errors)} errors, "
            f"{len(report.warnings)} warnings"
        )
    return report
