"""Length bounds for irreducible maps and chains of non-isomorphisms."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from ..core.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bounds:
    """Algebra constants entering the irreducible-map length estimate.

    Attributes:
        m: Maximal length of the regular module on either side.
        s: Maximal length of the domain of a minimal right approximation
            of a simple module (1 for the whole module category).
    """

    m: int
    s: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.s < 1:
            raise PreconditionError(
                f"bounds need positive constants, got m={self.m}, s={self.s}"
            )

    @property
    def p(self) -> int:
        return self.s * (1 + self.m**2) - 1

    def __str__(self) -> str:
        return f"m={self.m} s={self.s} p={self.p}"


def harada_sai_bound(n: int) -> int:
    """Length of a chain of non-isomorphisms between modules of length <= n
    whose composite is guaranteed to vanish."""
    if n < 1:
        raise PreconditionError(f"module length bound must be positive, got {n}")
    return 2**n - 1


def length_bounds(bounds: Bounds, length_y: int) -> tuple[int, int]:
    """Interval for l(X) given an irreducible map between X and Y.

    Returns:
        (lower, upper), with |l(X) - l(Y)| <= l(Y) * p and l(X) >= 1.
    """
    if length_y < 1:
        raise PreconditionError(f"module length must be positive, got {length_y}")
    spread = length_y * bounds.p
    lower = max(1, length_y - spread)
    upper = length_y + spread
    logger.debug(f"l(Y)={length_y} with {bounds}: l(X) in [{lower}, {upper}]")
    return lower, upper
