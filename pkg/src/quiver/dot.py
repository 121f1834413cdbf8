"""Graphviz DOT rendering of translation-quiver windows."""
from __future__ import annotations

from collections.abc import Iterator

from .models import ARVertex, TranslationQuiver


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', r"\""))


def node_label(v: ARVertex) -> str:
    """Vertex label with "[" for projective and "]" for Ext-injective."""
    label = v.label
    if v.projective:
        label = "[" + label
    if v.ext_injective:
        label = label + "]"
    return label


def iter_dot(tq: TranslationQuiver) -> Iterator[str]:
    """Yield DOT lines; 1-arrows solid, tau as dotted arrows z -> tau(z)."""
    canonical = tq.canonical()
    yield f"digraph {_gvquote(canonical.name or 'ar_quiver')} {{"
    yield "  rankdir=LR;"
    for v in canonical.vertices:
        attrs = [f"label={_gvquote(node_label(v))}"]
        if not v.mesh_complete:
            attrs.append("peripheries=2")
        yield f"  {_gvquote(v.id)} [{', '.join(attrs)}];"
    for a in canonical.arrows:
        attrs = ["style=solid"]
        if a.valuation > 1:
            attrs.append(f'xlabel="({a.valuation},{a.valuation})"')
        yield f"  {_gvquote(a.source)} -> {_gvquote(a.target)} [{', '.join(attrs)}];"
    for z, t in canonical.translation:
        yield f"  {_gvquote(z)} -> {_gvquote(t)} [style=dotted, constraint=false];"
    yield "}"


def export_dot(tq: TranslationQuiver) -> str:
    return "\n".join(iter_dot(tq)) + "\n"
