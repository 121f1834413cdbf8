"""Exact integer matrix helpers on top of sympy's immutable matrices."""
from __future__ import annotations

from collections.abc import Sequence

from sympy import ImmutableMatrix

IntMatrix = ImmutableMatrix


def from_rows(rows: Sequence[Sequence[int]]) -> ImmutableMatrix:
    return ImmutableMatrix([list(r) for r in rows])


def from_columns(columns: Sequence[Sequence[int]]) -> ImmutableMatrix:
    if not columns:
        return ImmutableMatrix.zeros(0, 0)
    n = len(columns[0])
    return ImmutableMatrix(n, len(columns), lambda i, j: columns[j][i])


def identity(n: int) -> ImmutableMatrix:
    return ImmutableMatrix.eye(n)


def unit_vector(n: int, j: int) -> ImmutableMatrix:
    """Column e_j, 0-based."""
    return ImmutableMatrix(n, 1, lambda i, _: 1 if i == j else 0)


def matrix_power(m: ImmutableMatrix, k: int) -> ImmutableMatrix:
    """M^k by exact binary exponentiation; negative k uses the inverse."""
    base = m if k >= 0 else m.inv()
    result = identity(m.rows)
    e = abs(k)
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return ImmutableMatrix(result)


def to_rows(m: ImmutableMatrix) -> list[list[int]]:
    return [[int(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def column(m: ImmutableMatrix, j: int) -> tuple[int, ...]:
    return tuple(int(x) for x in m.col(j))


def format_matrix(m: ImmutableMatrix) -> str:
    """Row-major, whitespace separated, right-aligned columns."""
    rows = to_rows(m)
    if not rows:
        return ""
    width = max(len(str(x)) for row in rows for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in rows)
