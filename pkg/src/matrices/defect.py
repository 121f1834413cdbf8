"""Defect of Euclidean quivers and the Coxeter residual of a slice."""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

from sympy import ImmutableMatrix

from ..core.errors import PreconditionError
from ..diagrams.cartan import cartan, radical_generator
from ..diagrams.classify import classify
from ..quiver.models import Quiver, TranslationQuiver
from .coxeter import coxeter, injective_dims, path_counts, projective_dims, slice_quiver
from .intmatrix import identity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DefectData:
    """C^-d x - x = boundary(x) * h_q for every x."""

    d: int
    h_q: tuple[int, ...]
    boundary: tuple[int, ...]

    def apply(self, x: Sequence[int]) -> int:
        return sum(b * v for b, v in zip(self.boundary, x))

    def __str__(self) -> str:
        return (
            f"defect d = {self.d}\n"
            f"h_q = ({', '.join(map(str, self.h_q))})\n"
            f"boundary = ({', '.join(map(str, self.boundary))})"
        )


def _rank_one_factor(
    diff: ImmutableMatrix, h: tuple[int, ...]
) -> Optional[tuple[int, ...]]:
    """Row vector b with diff = h * b, or None."""
    row: list[int] = []
    for j in range(diff.cols):
        value = diff[0, j]
        if value % h[0] != 0:
            return None
        coefficient = int(value) // h[0]
        if any(diff[i, j] != coefficient * h[i] for i in range(diff.rows)):
            return None
        row.append(coefficient)
    return tuple(row)


def defect(q: Quiver, cap: int = 60) -> DefectData:
    """Minimal d >= 1 with C^-d - Id of rank one onto the radical line.

    Raises:
        PreconditionError: q is cyclic or not of Euclidean type, or no d up
            to `cap` works.
    """
    if not q.is_acyclic():
        raise PreconditionError("quiver has an oriented cycle or a loop")
    graph = q.underlying_graph()
    dtype = classify(graph)
    if not dtype.is_euclidean:
        raise PreconditionError(f"quiver of type {dtype} is not Euclidean")
    h = radical_generator(cartan(graph))
    if h is None:
        raise PreconditionError("Cartan matrix has no radical")
    c_inv = coxeter(q).inverse
    n = c_inv.rows
    power = identity(n)
    for d in range(1, cap + 1):
        power = power * c_inv
        boundary = _rank_one_factor(power - identity(n), h)
        if boundary is not None and any(boundary):
            logger.info(f"defect of {dtype} quiver: d = {d}")
            return DefectData(d, h, boundary)
    raise PreconditionError(f"no defect period up to {cap}")


@dataclass(frozen=True)
class DefectSigns:
    projectives: dict[str, int]
    injectives: dict[str, int]


def defect_signs(q: Quiver, data: DefectData) -> DefectSigns:
    """Defect values of the projective and injective dimension vectors."""
    return DefectSigns(
        {v: data.apply(p) for v, p in projective_dims(q).items()},
        {v: data.apply(i) for v, i in injective_dims(q).items()},
    )


def _check_residual_slice(window: TranslationQuiver, sigma: Sequence[str]) -> None:
    chosen = set(sigma)
    for v in sigma:
        vertex = window.vertex(v)
        if vertex.projective:
            raise PreconditionError(f"slice vertex {v} is projective")
        if window.tau(v) is None or not vertex.mesh_complete:
            raise PreconditionError(f"mesh ending at {v} is not complete")
        inside = [p for p in window.preds(v) if p in chosen]
        if len(inside) > 1:
            raise PreconditionError(
                f"slice vertex {v} has {len(inside)} predecessors in the slice"
            )
        if any(window.valuation(p, v) > 1 for p in inside):
            raise PreconditionError(f"multiple arrow into slice vertex {v}")


def tau_coxeter_residual(
    window: TranslationQuiver,
    sigma: Sequence[str],
    m: Optional[Sequence[int]] = None,
) -> tuple[int, ...]:
    """tau(m) - C^-1 m for the slice sigma.

    `m` defaults to the lengths of the slice vertices; tau(m) is always read
    from the window.
    """
    _check_residual_slice(window, sigma)
    if m is None:
        m = [_size(window, v) for v in sigma]
    if len(m) != len(sigma):
        raise PreconditionError("length vector does not match the slice")
    tau_m = [_size(window, window.tau(v) or v) for v in sigma]
    c_inv = coxeter(slice_quiver(window, sigma)).inverse
    predicted = c_inv * ImmutableMatrix(len(m), 1, list(m))
    residual = tuple(tau_m[i] - int(predicted[i, 0]) for i in range(len(sigma)))
    logger.debug(f"tau/Coxeter residual over {len(sigma)} slice vertices: {residual}")
    return residual


def injective_decomposition(
    window: TranslationQuiver, sigma: Sequence[str], residual: Sequence[int]
) -> dict[str, int]:
    """Coefficients C_u with residual = sum C_u dim I_u over the slice algebra."""
    counts = ImmutableMatrix(path_counts(slice_quiver(window, sigma)))
    solution = counts.inv() * ImmutableMatrix(len(residual), 1, list(residual))
    return {v: int(solution[i, 0]) for i, v in enumerate(sigma)}


def _size(window: TranslationQuiver, v: str) -> int:
    size = window.vertex(v).size
    if size is None:
        raise PreconditionError(f"vertex {v} has neither a length nor a dimension")
    return size
