"""Components that are large between two vertices, and their inner modules.

With Z an immediate successor of X, largeness is witnessed either by one
sectional path Z = Z_0 -> tau^-1(X) -> ... -> Z_k = Y (the case l = 0) or by
two paths Z_0 .. Z_{k+l} and Y_0 .. Y_{k+l} from Z to Y, each non-sectional
at exactly one place and tied together by tau.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from ..core.errors import PreconditionError
from ..quiver.models import TranslationQuiver
from .paths import PathInQuiver, check_path, is_sectional

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LargePair:
    """The two paths behind a largeness witness; y_path is None when l = 0."""

    z_path: tuple[str, ...]
    y_path: Optional[tuple[str, ...]] = None

    def __str__(self) -> str:
        if self.y_path is None:
            return " -> ".join(self.z_path)
        return f"{' -> '.join(self.z_path)} | {' -> '.join(self.y_path)}"


def _kink(path: Sequence[str], window: TranslationQuiver) -> Optional[int]:
    """Index i with tau(X_{i+1}) = X_{i-1}, when there is exactly one."""
    kinks = [
        i
        for i in range(1, len(path) - 1)
        if window.tau(path[i + 1]) == path[i - 1]
    ]
    return kinks[0] if len(kinks) == 1 else None


def _tau(window: TranslationQuiver, v: str, j: int) -> Optional[str]:
    return window.tau_power(v, j)


def _failure(
    window: TranslationQuiver,
    x: str,
    y: str,
    z_path: Sequence[str],
    y_path: Optional[Sequence[str]],
) -> Optional[str]:
    for p in (z_path, y_path):
        if p is not None:
            check_path(window, PathInQuiver(tuple(p)))
    z = z_path[0]
    if window.valuation(x, z) == 0:
        return f"{z} is not an immediate successor of {x}"
    if z_path[-1] != y:
        return f"path does not end in {y}"
    if y_path is None:
        k = len(z_path) - 1
        if k < 1 or z_path[1] != window.tau_inv(x):
            return "Z_1 is not tau^-1(X)"
        if not is_sectional(window, PathInQuiver(tuple(z_path))):
            return "path from Z to Y is not sectional"
        if any(window.vertex(v).projective for v in z_path[1:]):
            return "some Z_i is Ext-projective"
        return None

    if len(y_path) != len(z_path) or y_path[0] != z or y_path[-1] != y:
        return "paths do not both run from Z to Y with equal length"
    l = _kink(z_path, window)  # noqa: E741
    k = _kink(y_path, window)
    if l is None or k is None:
        return "a path is not non-sectional in exactly one place"
    if k + l != len(z_path) - 1:
        return "kink positions do not add up to the path length"
    if window.tau(y_path[1]) != x:
        return "tau(Y_1) is not X"
    if z_path[1] == y_path[1] or z_path[-2] == y_path[-2]:
        return "paths share their first or last step"
    if any(window.vertex(v).projective for v in y_path[1 : k + 1]):
        return "some Y_i with i <= k is projective"
    small, big = (z_path, y_path) if l <= k else (y_path, z_path)
    lo, hi = (l, k) if l <= k else (k, l)
    for i in range(hi - lo + 1):
        if big[i] != _tau(window, small[i + 2 * lo], lo):
            return "tau shift between the paths fails"
    for i in range(lo + 1):
        if y_path[k - i] != _tau(window, y_path[k + i], i):
            return "Y path is not symmetric around its kink"
        if z_path[l - i] != _tau(window, z_path[l + i], i):
            return "Z path is not symmetric around its kink"
    return None


def is_large_between(
    window: TranslationQuiver,
    x: str,
    y: str,
    z_path: Sequence[str],
    y_path: Optional[Sequence[str]] = None,
) -> bool:
    """Check the largeness conditions for the given witness paths."""
    reason = _failure(window, x, y, z_path, y_path)
    if reason is not None:
        logger.debug(f"not large between {x} and {y}: {reason}")
    return reason is None


def inner_modules(
    window: TranslationQuiver,
    x: str,
    y: str,
    z_path: Sequence[str],
    y_path: Optional[Sequence[str]] = None,
) -> set[str]:
    """Inner modules of the witness; translates leaving the window are skipped.

    Raises:
        PreconditionError: The paths do not witness largeness.
    """
    reason = _failure(window, x, y, z_path, y_path)
    if reason is not None:
        raise PreconditionError(f"not large between {x} and {y}: {reason}")
    if y_path is None:
        return set(z_path)
    l = _kink(z_path, window) or 0  # noqa: E741
    k = _kink(y_path, window) or 0

    def translates(path: Sequence[str], index: int, up_to: int) -> list[Optional[str]]:
        return [_tau(window, path[index], j) for j in range(up_to + 1)]

    found: list[Optional[str]] = []
    lo = min(k, l)
    base = z_path if l <= k else y_path
    for i in range(abs(k - l) + 1):
        found += translates(base, i + 2 * lo, lo)
    for i in range(lo + 1):
        found += translates(y_path, k + i, i)
    for i in range(1, lo + 1):
        found += translates(z_path, l + i, i - 1)
    return {v for v in found if v is not None}


def _paths_between(
    window: TranslationQuiver, source: str, target: str, length: int
) -> list[tuple[str, ...]]:
    out: list[tuple[str, ...]] = []
    pos = {v: i for i, v in enumerate(window.ids)}

    def walk(path: tuple[str, ...]) -> None:
        if len(path) - 1 == length:
            if path[-1] == target:
                out.append(path)
            return
        for nxt in sorted(window.succs(path[-1]), key=pos.__getitem__):
            walk(path + (nxt,))

    walk((source,))
    return out


def find_large_pairs(
    window: TranslationQuiver, x: str, y: str, max_length: int = 12
) -> list[LargePair]:
    """Enumerate witnesses of largeness between x and y up to a path length."""
    pos = {v: i for i, v in enumerate(window.ids)}
    found: list[LargePair] = []
    for z in sorted(window.succs(x), key=pos.__getitem__):
        for length in range(1, max_length + 1):
            paths = _paths_between(window, z, y, length)
            for p in paths:
                if is_large_between(window, x, y, p):
                    found.append(LargePair(p))
            for p in paths:
                for q in paths:
                    if p != q and is_large_between(window, x, y, p, q):
                        found.append(LargePair(p, q))
    logger.debug(f"{len(found)} largeness witnesses between {x} and {y}")
    return found
