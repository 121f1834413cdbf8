"""Mesh arithmetic on dimension vectors."""
from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

from ..core.errors import PreconditionError

logger = logging.getLogger(__name__)

DimVector = tuple[int, ...]


class MeshCloses(Exception):
    """The mesh cannot be completed: the missing end would not be a module.

    Raised when the computed vector has a negative entry or is zero. Knitting
    reads it as "the known end is injective (resp. projective)".
    """

    def __init__(self, vector: DimVector) -> None:
        self.vector = vector
        super().__init__(f"mesh closes: computed vector {vector}")


def add_scaled(total: list[int], dim: Sequence[int], times: int) -> None:
    if len(total) != len(dim):
        raise PreconditionError(
            f"dimension vectors of sizes {len(total)} and {len(dim)} in one mesh"
        )
    for i, x in enumerate(dim):
        total[i] += times * x


def complete_mesh(
    known: Sequence[int], middles: Iterable[tuple[Sequence[int], int]]
) -> DimVector:
    """The missing end of a mesh: sum of valued middle terms minus the known end.

    `middles` holds (dim vector, valuation) pairs. The same formula gives
    tau^-1(Z) from Z and gives tau(Z) from Z.

    Raises:
        MeshCloses: The result has a negative entry or is zero.
        PreconditionError: Vectors of different sizes.
    """
    total = [0] * len(known)
    for dim, valuation in middles:
        add_scaled(total, dim, valuation)
    add_scaled(total, known, -1)
    result = tuple(total)
    if any(x < 0 for x in result) or not any(result):
        raise MeshCloses(result)
    return result
