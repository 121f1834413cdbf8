"""Cartan matrices, subadditive functions and the additive-function verdict."""
from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import networkx as nx
from sympy import ImmutableMatrix, Rational, ilcm, igcd

from ..core.errors import PreconditionError
from .classify import classify, contains_euclidean
from .models import DiagramType, UndirectedGraph

logger = logging.getLogger(__name__)

Number = Union[int, Fraction, Rational]


def cartan(g: UndirectedGraph) -> ImmutableMatrix:
    """2 on the diagonal, minus the edge multiplicity elsewhere.

    Rows and columns follow g.vertices.
    """
    n = len(g.vertices)
    return ImmutableMatrix(
        n,
        n,
        lambda i, j: 2 if i == j else -g.multiplicity(g.vertices[i], g.vertices[j]),
    )


def is_positive_definite(matrix: ImmutableMatrix) -> bool:
    return bool(matrix.is_positive_definite)


def is_positive_semidefinite(matrix: ImmutableMatrix) -> bool:
    return bool(matrix.is_positive_semidefinite)


def primitive_integer_vector(values: list[Rational]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer one with a positive lead."""
    denominators = [Rational(v).q for v in values]
    scale = 1
    for d in denominators:
        scale = ilcm(scale, d)
    ints = [int(Rational(v) * scale) for v in values]
    divisor = 0
    for x in ints:
        divisor = igcd(divisor, x)
    if divisor == 0:
        return tuple(ints)
    ints = [x // divisor for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def radical_generator(matrix: ImmutableMatrix) -> Optional[tuple[int, ...]]:
    """Primitive integer generator of a one-dimensional null space, else None."""
    basis = matrix.nullspace()
    if len(basis) != 1:
        return None
    return primitive_integer_vector(list(basis[0]))


@dataclass(frozen=True)
class SubadditiveResult:
    """Per-vertex slack sum_x c_xy n_x with the two derived flags."""

    slack: dict[str, Rational]
    subadditive: bool
    additive: bool


def check_subadditive(g: UndirectedGraph, n: Mapping[str, Number]) -> SubadditiveResult:
    missing = [v for v in g.vertices if v not in n]
    if missing:
        raise PreconditionError(f"function is not defined on {', '.join(missing)}")
    c = cartan(g)
    values = [Rational(n[v]) for v in g.vertices]  # type: ignore[arg-type]
    slack = {}
    for j, y in enumerate(g.vertices):
        slack[y] = sum((c[i, j] * values[i] for i in range(len(values))), Rational(0))
    return SubadditiveResult(
        slack=slack,
        subadditive=all(s >= 0 for s in slack.values()),
        additive=all(s == 0 for s in slack.values()),
    )


@dataclass(frozen=True)
class AdditiveVerdict:
    """Whether a positive subadditive, non-additive function exists.

    For Dynkin graphs `function` is such a function. Otherwise `certificate`
    is a positive additive function on `witness` (the Cartan radical
    generator), which rules one out.
    """

    diagram: DiagramType
    exists: bool
    function: Optional[dict[str, Rational]] = None
    certificate: Optional[dict[str, int]] = None
    witness: Optional[UndirectedGraph] = field(default=None, compare=False)

    def __str__(self) -> str:
        if self.exists:
            return f"{self.diagram}: subadditive non-additive function exists"
        return f"{self.diagram}: none; certificate {self.certificate}"


def additive_dynkin_verdict(g: UndirectedGraph) -> AdditiveVerdict:
    """Decide existence of a subadditive, non-additive positive function.

    Raises:
        PreconditionError: Empty, disconnected or looped input.
    """
    if not g.vertices or not nx.is_connected(g.to_networkx()):
        raise PreconditionError("additive_dynkin_verdict requires a connected graph")
    if g.has_loops():
        raise PreconditionError("additive_dynkin_verdict requires a loop-free graph")
    diagram = classify(g)
    if diagram.is_dynkin:
        c = cartan(g)
        ones = ImmutableMatrix([1] * len(g.vertices))
        solution = c.inv() * ones
        function = {v: Rational(solution[i]) for i, v in enumerate(g.vertices)}
        return AdditiveVerdict(diagram, True, function=function)

    witness = g if diagram.is_euclidean else contains_euclidean(g).witness
    assert witness is not None
    generator = radical_generator(cartan(witness))
    assert generator is not None
    certificate = dict(zip(witness.vertices, generator))
    logger.debug(f"{diagram}: additive certificate {certificate}")
    return AdditiveVerdict(diagram, False, certificate=certificate, witness=witness)
