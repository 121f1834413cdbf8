"""Parser for the line-oriented quiver text format.

Example::

    # A3, linear orientation
    vertices 1:e1 2:e2 3:e3
    arrows a:1->2 b:2->3
    relations b*a = 0

Statements start with a keyword and may continue on following lines.
Several statements can share a line when separated by ``;``. Relation
terms list arrows in traversal order, joined by ``*``.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from ..core.errors import QuiverSyntaxError, RelationError, UnknownVertexError
from .models import Quiver, QuiverArrow, QuiverVertex, Relation, RelationTerm

logger = logging.getLogger(__name__)

KEYWORDS = ("vertices", "arrows", "relations")

_ID = r"[\w']+"
_KEYWORD_RE = re.compile(r"(vertices|arrows|relations)\b")
_VERTEX_RE = re.compile(rf"^({_ID})(?::(\S+))?$")
_ARROW_RE = re.compile(rf"^({_ID}):({_ID})->({_ID})$")
_TERM_RE = re.compile(rf"\s*([+-]?)\s*(\d*)\s*\*?\s*({_ID}(?:\s*\*\s*{_ID})*)\s*")
_ITEM_RE = re.compile(r"\S+")


@dataclass
class _Item:
    text: str
    line: int
    column: int


def _statements(text: str) -> dict[str, list[_Item]]:
    """Split source into keyword -> items, keeping 1-based positions."""
    items: dict[str, list[_Item]] = {k: [] for k in KEYWORDS}
    current: str | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        offset = 0
        for chunk in line.split(";"):
            start = offset
            offset += len(chunk) + 1
            stripped = chunk.lstrip()
            if not stripped.strip():
                continue
            col = start + len(chunk) - len(stripped) + 1
            match = _KEYWORD_RE.match(stripped)
            if match:
                current = match.group(1)
                body = stripped[match.end():]
                body_col = col + match.end()
            elif current is None:
                word = stripped.split()[0]
                raise QuiverSyntaxError(
                    f"expected one of {', '.join(KEYWORDS)}, got '{word}'",
                    line_no,
                    col,
                )
            else:
                body = stripped
                body_col = col
            if current == "relations":
                rel_offset = 0
                for part in body.split(","):
                    rel_col = body_col + rel_offset + len(part) - len(part.lstrip())
                    rel_offset += len(part) + 1
                    if part.strip():
                        items[current].append(_Item(part.strip(), line_no, rel_col))
            else:
                for m in _ITEM_RE.finditer(body):
                    column = body_col + m.start()
                    items[current].append(_Item(m.group(0), line_no, column))
    return items


def _parse_relation(item: _Item) -> list[tuple[int, list[str]]]:
    text = item.text
    if "=" in text:
        left, right = text.split("=", 1)
        if right.strip() != "0":
            raise QuiverSyntaxError(
                "relations must have the form '<expr> = 0'", item.line, item.column
            )
        text = left
    terms: list[tuple[int, list[str]]] = []
    pos = 0
    while pos < len(text.rstrip()):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos or (terms and not m.group(1)):
            raise QuiverSyntaxError(
                f"cannot read relation term at '{text[pos:].strip()}'",
                item.line,
                item.column + pos,
            )
        sign = -1 if m.group(1) == "-" else 1
        coefficient = sign * (int(m.group(2)) if m.group(2) else 1)
        arrows = [a.strip() for a in m.group(3).split("*")]
        terms.append((coefficient, arrows))
        pos = m.end()
    if not terms:
        raise QuiverSyntaxError("empty relation", item.line, item.column)
    return terms


def parse_quiver(text: str) -> Quiver:
    """Parse quiver source into a Quiver.

    Args:
        text: Source in the quiver grammar.

    Returns:
        Quiver with relations kept verbatim as well as term lists.

    Raises:
        QuiverSyntaxError: Malformed statement, with line and column.
        UnknownVertexError: Arrow endpoint not declared.
        RelationError: Relation term that is not a composable arrow chain.
    """
    items = _statements(text)

    vertices: list[QuiverVertex] = []
    seen: set[str] = set()
    for item in items["vertices"]:
        m = _VERTEX_RE.match(item.text)
        if m is None:
            raise QuiverSyntaxError(f"bad vertex '{item.text}'", item.line, item.column)
        vid = m.group(1)
        if vid in seen:
            raise QuiverSyntaxError(f"duplicate vertex '{vid}'", item.line, item.column)
        seen.add(vid)
        vertices.append(QuiverVertex(vid, m.group(2) or vid))

    arrows: list[QuiverArrow] = []
    arrow_index: dict[str, QuiverArrow] = {}
    for item in items["arrows"]:
        m = _ARROW_RE.match(item.text)
        if m is None:
            raise QuiverSyntaxError(
                f"bad arrow '{item.text}', expected <id>:<src>-><dst>",
                item.line,
                item.column,
            )
        aid, src, dst = m.groups()
        for end in (src, dst):
            if end not in seen:
                raise UnknownVertexError(
                    f"unknown vertex '{end}' in arrow '{aid}' "
                    f"(line {item.line}, column {item.column})"
                )
        if aid in arrow_index:
            raise QuiverSyntaxError(f"duplicate arrow '{aid}'", item.line, item.column)
        arrow = QuiverArrow(aid, src, dst, aid)
        arrow_index[aid] = arrow
        arrows.append(arrow)

    relations: list[Relation] = []
    for item in items["relations"]:
        terms = []
        for coefficient, path in _parse_relation(item):
            for aid in path:
                if aid not in arrow_index:
                    raise RelationError(
                        f"unknown arrow '{aid}' in relation '{item.text}'"
                    )
            for first, second in zip(path, path[1:]):
                if arrow_index[first].target != arrow_index[second].source:
                    raise RelationError(
                        f"arrows '{first}' and '{second}' are not composable "
                        f"in relation '{item.text}'"
                    )
            terms.append(RelationTerm(coefficient, tuple(path)))
        relations.append(Relation(item.text, tuple(terms)))

    quiver = Quiver(tuple(vertices), tuple(arrows), tuple(relations))
    logger.debug(
        f"Parsed quiver: {len(vertices)} vertices, {len(arrows)} arrows, "
        f"{len(relations)} relations"
    )
    return quiver


def format_quiver(quiver: Quiver) -> str:
    """Render a quiver back into the text grammar."""
    lines = [
        "vertices "
        + " ".join(
            v.id if v.label == v.id else f"{v.id}:{v.label}" for v in quiver.vertices
        )
    ]
    if quiver.arrows:
        lines.append(
            "arrows "
            + " ".join(f"{a.id}:{a.source}->{a.target}" for a in quiver.arrows)
        )
    if quiver.relations:
        lines.append("relations " + ", ".join(r.text for r in quiver.relations))
    return "\n".join(lines) + "\n"
