"""Degree bounds and the certificates that justify them."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class DegreeKind(Enum):
    EXACTLY_ONE = "exactly_one"
    AT_LEAST = "at_least"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


class DegreeRule(Enum):
    """Rule that produced a bound."""

    SURJECTIVE_MESH = "r1-single-middle-term"
    PRESECTIONAL_PATH = "r2-presectional-path"
    INFINITE_PATH = "r3-infinite-path"
    TWO_INFINITE_PATHS = "two-infinite-paths"
    SHIFT_FOLD = "tau-shift-fold"
    NONE = "none"


@dataclass(frozen=True)
class Certificate:
    rule: DegreeRule
    witness: tuple[str, ...] = ()
    note: str = ""

    def __str__(self) -> str:
        text = self.rule.value
        if self.witness:
            text += f" via {' -> '.join(self.witness)}"
        if self.note:
            text += f" ({self.note})"
        return text


@dataclass(frozen=True)
class DegreeBound:
    """What the window certifies about the degree of one arrow."""

    source: str
    target: str
    side: Side
    kind: DegreeKind
    certificate: Certificate
    n: Optional[int] = None

    @property
    def value(self) -> str:
        if self.kind is DegreeKind.EXACTLY_ONE:
            return "1"
        if self.kind is DegreeKind.AT_LEAST:
            return f">= {self.n}"
        if self.kind is DegreeKind.INFINITE:
            return "inf"
        return "?"

    def __str__(self) -> str:
        return (
            f"{self.source}->{self.target} {self.side.value} degree "
            f"{self.value} [{self.certificate}]"
        )


def unknown(source: str, target: str, side: Side, note: str = "") -> DegreeBound:
    return DegreeBound(
        source, target, side, DegreeKind.UNKNOWN, Certificate(DegreeRule.NONE, (), note)
    )
