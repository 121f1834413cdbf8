"""Left and right degree bounds read off the shape of a window.

Rules, tried in order for an arrow X -> Y:

R1  Y is not projective, its mesh is complete, X is the only middle term
    and l(X) > l(Y): the arrow is surjective and has left degree 1.
R2  A pre-sectional path X_n -> ... -> X_1 -> Y avoiding projective
    vertices, with X + X_1 a summand of the middle term ending in Y, forces
    left degree > n.
R3  When such a path continues forever to the left the degree is infinite.
    Continuation is never guessed from truncation: it is certified by an
    `infinite_paths` entry in the window metadata or by a path that leaves a
    recognised tube through the window boundary.

Right degrees are the left degrees of the opposite window.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import replace
from typing import Any, Optional

from ..core.errors import PreconditionError
from ..quiver.components import connected_components
from ..quiver.models import TranslationQuiver
from ..sectional.paths import PathInQuiver, is_presectional
from ..tubes.recognize import recognize_tube
from .models import (
    Certificate,
    DegreeBound,
    DegreeKind,
    DegreeRule,
    Side,
    unknown,
)

logger = logging.getLogger(__name__)

DEFAULT_PATH_CAP = 12
INFINITE_PATHS_KEY = "infinite_paths"
INFINITE_RIGHT_PATHS_KEY = "infinite_right_paths"


def _declared_pairs(paths: Any) -> set[tuple[str, str]]:
    pairs: set[tuple[str, str]] = set()
    for path in paths or []:
        ids = [str(v) for v in path]
        pairs.update(zip(ids, ids[1:]))
    return pairs


class InfinitudeCertifier:
    """Decides whether a pre-sectional path provably continues to the left."""

    def __init__(self, window: TranslationQuiver) -> None:
        self.window = window
        self.declared = _declared_pairs(window.metadata.get(INFINITE_PATHS_KEY))
        self.tube_vertices: set[str] = set()
        for component in connected_components(window):
            if recognize_tube(component) is not None:
                self.tube_vertices.update(component.ids)

    def note(self, path: Sequence[str], capped: bool) -> Optional[str]:
        """Why ... -> path[0] -> ... -> path[-1] is infinite, or None."""
        if (path[-2], path[-1]) in self.declared:
            return "declared infinite path"
        start = path[0]
        if (
            not capped
            and start in self.tube_vertices
            and self.window.is_boundary(start)
        ):
            return "coray of a recognised tube, cut by the window"
        return None


def _require_arrow(window: TranslationQuiver, source: str, target: str) -> None:
    window.vertex(source)
    window.vertex(target)
    if window.valuation(source, target) == 0:
        raise PreconditionError(f"no arrow {source} -> {target} in the window")


def _first_steps(window: TranslationQuiver, source: str, target: str) -> list[str]:
    """Candidates for X_1: X + X_1 must fit in the middle term ending in Y."""
    return [
        p
        for p, a in window.preds(target).items()
        if not window.vertex(p).projective and (p != source or a >= 2)
    ]


def presectional_paths_into(
    window: TranslationQuiver,
    firsts: Iterable[str],
    target: str,
    cap: int = DEFAULT_PATH_CAP,
) -> list[tuple[tuple[str, ...], bool]]:
    """Maximal projective-free pre-sectional paths X_n -> ... -> X_1 -> target.

    Returns (path, capped) pairs; capped paths stopped at `cap` arrows
    rather than at a dead end.
    """
    found: list[tuple[tuple[str, ...], bool]] = []

    def extend(path: tuple[str, ...]) -> None:
        if len(path) - 1 >= cap:
            found.append((path, True))
            return
        grew = False
        for p in window.preds(path[0]):
            if p in path or window.vertex(p).projective:
                continue
            candidate = (p, *path)
            if is_presectional(window, PathInQuiver(candidate)):
                grew = True
                extend(candidate)
        if not grew:
            found.append((path, False))

    for first in firsts:
        extend((first, target))
    return found


def _surjective_mesh(
    window: TranslationQuiver, source: str, target: str
) -> Optional[DegreeBound]:
    y = window.vertex(target)
    t = window.tau(target)
    if y.projective or not y.mesh_complete or t is None:
        return None
    if window.preds(target) != {source: 1}:
        return None
    length_x, length_y = window.vertex(source).size, y.size
    if length_x is None or length_y is None or length_x <= length_y:
        return None
    return DegreeBound(
        source,
        target,
        Side.LEFT,
        DegreeKind.EXACTLY_ONE,
        Certificate(
            DegreeRule.SURJECTIVE_MESH,
            (t, source, target),
            f"l({source})={length_x} > l({target})={length_y}",
        ),
    )


def infer_left_degree(
    window: TranslationQuiver,
    source: str,
    target: str,
    path_cap: int = DEFAULT_PATH_CAP,
    certifier: Optional[InfinitudeCertifier] = None,
) -> DegreeBound:
    """Bound the left degree of the arrow source -> target.

    Raises:
        PreconditionError: The arrow is not in the window.
        UnknownVertexError: An endpoint is not in the window.
    """
    _require_arrow(window, source, target)
    bound = _surjective_mesh(window, source, target)
    if bound is not None:
        return bound
    paths = presectional_paths_into(
        window, _first_steps(window, source, target), target, path_cap
    )
    if not paths:
        return unknown(source, target, Side.LEFT, "no pre-sectional path into target")
    certifier = certifier or InfinitudeCertifier(window)
    for path, capped in paths:
        note = certifier.note(path, capped)
        if note is not None:
            return DegreeBound(
                source,
                target,
                Side.LEFT,
                DegreeKind.INFINITE,
                Certificate(DegreeRule.INFINITE_PATH, path, note),
            )
    longest = max(paths, key=lambda p: len(p[0]))[0]
    n = len(longest) - 1
    return DegreeBound(
        source,
        target,
        Side.LEFT,
        DegreeKind.AT_LEAST,
        Certificate(DegreeRule.PRESECTIONAL_PATH, longest),
        n + 1,
    )


def _right_view(window: TranslationQuiver) -> TranslationQuiver:
    """Opposite window, declared right-infinite paths turned into left ones."""
    op = window.opposite()
    declared = window.metadata.get(INFINITE_RIGHT_PATHS_KEY) or []
    metadata = {INFINITE_PATHS_KEY: [list(reversed(p)) for p in declared]}
    return replace(op, metadata=metadata)


def _as_right(bound: DegreeBound) -> DegreeBound:
    cert = bound.certificate
    return DegreeBound(
        bound.target,
        bound.source,
        Side.RIGHT,
        bound.kind,
        Certificate(cert.rule, tuple(reversed(cert.witness)), cert.note),
        bound.n,
    )


def infer_right_degree(
    window: TranslationQuiver,
    source: str,
    target: str,
    path_cap: int = DEFAULT_PATH_CAP,
) -> DegreeBound:
    """Bound the right degree of source -> target on the opposite window."""
    _require_arrow(window, source, target)
    return _as_right(infer_left_degree(_right_view(window), target, source, path_cap))


def infer_degrees(
    window: TranslationQuiver,
    side: Side = Side.LEFT,
    path_cap: int = DEFAULT_PATH_CAP,
) -> list[DegreeBound]:
    """Bounds for every arrow of the window, in canonical arrow order."""
    view = window if side is Side.LEFT else _right_view(window)
    certifier = InfinitudeCertifier(view)
    bounds = []
    for a in window.canonical().arrows:
        if side is Side.LEFT:
            bounds.append(
                infer_left_degree(view, a.source, a.target, path_cap, certifier)
            )
        else:
            bounds.append(
                _as_right(
                    infer_left_degree(view, a.target, a.source, path_cap, certifier)
                )
            )
    logger.info(f"Inferred {side.value} degrees of {len(bounds)} arrows")
    return bounds


def _require_left_stable(window: TranslationQuiver, v: str) -> None:
    current: Optional[str] = v
    seen: set[str] = set()
    while current is not None and current not in seen:
        if window.vertex(current).projective:
            raise PreconditionError(
                f"{v} is not left stable: its tau-orbit reaches projective {current}"
            )
        seen.add(current)
        current = window.tau(current)


def _shifts(
    window: TranslationQuiver, source: str, target: str
) -> tuple[list[tuple[str, str]], bool]:
    """In-window tau-shifts of an arrow and whether they close up periodically."""
    shifts = [(source, target)]
    for k in (1, -1):
        s: Optional[str] = source
        t: Optional[str] = target
        while True:
            s = window.tau_power(s, k) if s is not None else None
            t = window.tau_power(t, k) if t is not None else None
            if s is None or t is None or window.valuation(s, t) == 0:
                break
            if (s, t) == (source, target):
                return shifts, True
            shifts.append((s, t))
    return shifts, False


def infer_global_left_degree(
    window: TranslationQuiver,
    source: str,
    target: str,
    path_cap: int = DEFAULT_PATH_CAP,
) -> DegreeBound:
    """Bound the minimum of the left degrees over the tau-orbit of an arrow.

    Two certified infinite pre-sectional paths merging at the target give an
    infinite bound for every arrow into it. Otherwise the per-arrow bounds of
    the in-window shifts are folded; lower bounds need the whole orbit, so
    only a periodic orbit yields one.

    Raises:
        PreconditionError: The arrow is missing or an endpoint is not left
            stable.
    """
    _require_arrow(window, source, target)
    for v in (source, target):
        _require_left_stable(window, v)
    certifier = InfinitudeCertifier(window)

    firsts = [p for p in window.preds(target) if not window.vertex(p).projective]
    merging: dict[str, tuple[str, ...]] = {}
    for path, capped in presectional_paths_into(window, firsts, target, path_cap):
        if path[-2] not in merging and certifier.note(path, capped) is not None:
            merging[path[-2]] = path
    if len(merging) >= 2:
        first, second = list(merging.values())[:2]
        return DegreeBound(
            source,
            target,
            Side.LEFT,
            DegreeKind.INFINITE,
            Certificate(
                DegreeRule.TWO_INFINITE_PATHS,
                first,
                f"merges with {' -> '.join(second)}",
            ),
        )

    shifts, periodic = _shifts(window, source, target)
    bounds = [infer_left_degree(window, s, t, path_cap, certifier) for s, t in shifts]
    for b in bounds:
        if b.kind is DegreeKind.EXACTLY_ONE:
            return replace(
                b,
                source=source,
                target=target,
                certificate=Certificate(
                    DegreeRule.SHIFT_FOLD, (b.source, b.target), "shift of degree 1"
                ),
            )
    if not periodic:
        return unknown(
            source, target, Side.LEFT, "tau-orbit of the arrow leaves the window"
        )
    if all(b.kind is DegreeKind.INFINITE for b in bounds):
        return DegreeBound(
            source,
            target,
            Side.LEFT,
            DegreeKind.INFINITE,
            Certificate(
                DegreeRule.SHIFT_FOLD,
                (source, target),
                f"all {len(shifts)} shifts are infinite",
            ),
        )
    lower = [
        b.n if b.kind is DegreeKind.AT_LEAST else None
        for b in bounds
        if b.kind is not DegreeKind.INFINITE
    ]
    if lower and all(n is not None for n in lower):
        return DegreeBound(
            source,
            target,
            Side.LEFT,
            DegreeKind.AT_LEAST,
            Certificate(
                DegreeRule.SHIFT_FOLD, (source, target), f"{len(shifts)} shifts"
            ),
            min(n for n in lower if n is not None),
        )
    return unknown(source, target, Side.LEFT, "a shift has no lower bound")
