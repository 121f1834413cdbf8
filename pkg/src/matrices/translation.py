"""Translation matrices of components and the Dynkin family identities."""
from __future__ import annotations

import logging
import re
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from sympy import ImmutableMatrix

from ..core.errors import NotClosedSliceError, PreconditionError
from ..quiver.models import TranslationQuiver
from ..tubes.zb import DirectedTree, zb_id, zb_window
from .intmatrix import from_columns, from_rows, identity, matrix_power, unit_vector

logger = logging.getLogger(__name__)


class Direction(Enum):
    LEFT = "left"
    RIGHT = "right"


def translation_matrix(
    window: TranslationQuiver,
    sigma: Sequence[str],
    direction: Direction = Direction.LEFT,
) -> ImmutableMatrix:
    """Express tau(X_j) (or tau^-1(X_j)) in the basis x_1..x_n of sigma.

    Column j follows from the mesh ending at X_j (starting at X_j for
    RIGHT): every middle term is either a slice vertex or the translate of
    one, and translates of slice vertices are substituted recursively.

    Raises:
        PreconditionError: A needed mesh is missing from the window or sigma
            holds a projective (Ext-injective for RIGHT) vertex.
        NotClosedSliceError: Some translate is not an integer combination
            of the slice vertices.
    """
    if not sigma:
        raise PreconditionError("empty slice")
    if len(set(sigma)) != len(sigma):
        raise PreconditionError("slice lists a vertex twice")
    for v in sigma:
        window.vertex(v)
    pos = {v: i for i, v in enumerate(sigma)}
    n = len(sigma)

    if direction is Direction.LEFT:
        shift: Callable[[str], Optional[str]] = window.tau
        unshift: Callable[[str], Optional[str]] = window.tau_inv
        middle = window.preds
    else:
        shift = window.tau_inv
        unshift = window.tau
        middle = window.succs

    def mesh_ready(v: str) -> bool:
        vertex = window.vertex(v)
        if direction is Direction.LEFT:
            return not vertex.projective and vertex.mesh_complete
        if vertex.ext_injective:
            return False
        t = window.tau_inv(v)
        return t is not None and window.vertex(t).mesh_complete

    memo: dict[str, list[int]] = {}
    visiting: set[str] = set()

    def shifted(v: str) -> list[int]:
        if v in memo:
            return memo[v]
        if v in visiting:
            raise NotClosedSliceError(f"not a closed slice: cyclic substitution at {v}")
        if not mesh_ready(v) or shift(v) is None:
            raise PreconditionError(
                f"mesh of {v} is not complete in window '{window.name}'"
            )
        visiting.add(v)
        column = [0] * n
        column[pos[v]] -= 1
        for y, valuation in middle(v).items():
            if y in pos:
                column[pos[y]] += valuation
                continue
            u = unshift(y)
            if u is None or u not in pos:
                raise NotClosedSliceError(
                    f"not a closed slice: {y} next to {v} is neither in the slice "
                    f"nor a translate of a slice vertex"
                )
            for i, c in enumerate(shifted(u)):
                column[i] += valuation * c
        visiting.discard(v)
        memo[v] = column
        return column

    columns = [shifted(v) for v in sigma]
    logger.debug(f"{direction.value} translation matrix of size {n} computed")
    return from_columns(columns)


def cotranslation_matrix(
    window: TranslationQuiver, sigma: Sequence[str]
) -> ImmutableMatrix:
    return translation_matrix(window, sigma, Direction.RIGHT)


@dataclass(frozen=True)
class NegativeUnitWitness:
    """M^k e_j = -e_l, indices 1-based."""

    k: int
    j: int
    l: int  # noqa: E741

    def __str__(self) -> str:
        return f"M^{self.k} e_{self.j} = -e_{self.l}"


def check_no_negative_unit(
    m: ImmutableMatrix, k_max: int = 60
) -> Optional[NegativeUnitWitness]:
    """First witness M^k e_j = -e_l with k <= k_max, scanning j then k."""
    if m.rows != m.cols:
        raise PreconditionError("matrix is not square")
    n = m.rows
    for j in range(n):
        v = unit_vector(n, j)
        for k in range(1, k_max + 1):
            v = m * v
            nonzero = [i for i in range(n) if v[i, 0] != 0]
            if len(nonzero) == 1 and v[nonzero[0], 0] == -1:
                return NegativeUnitWitness(k, j + 1, nonzero[0] + 1)
    return None


_FAMILY_RE = re.compile(r"^\s*([ADE])\s*_?\s*(\d+)\s*$")


def parse_family(text: str) -> tuple[str, int]:
    """'E8' -> ('E', 8). Raises PreconditionError on unknown families."""
    match = _FAMILY_RE.match(text.upper())
    if match is None:
        raise PreconditionError(f"unknown Dynkin family '{text}'")
    family, n = match.group(1), int(match.group(2))
    if (
        (family == "A" and n < 1)
        or (family == "D" and n < 4)
        or (family == "E" and n not in (6, 7, 8))
    ):
        raise PreconditionError(f"no Dynkin diagram {family}{n}")
    return family, n


def family_slice(family: str, n: int) -> DirectedTree:
    """The slice X_1..X_n used for each family's translation matrix.

    A_n: X_n -> ... -> X_1. D_n: X_{n-2} -> ... -> X_1 -> X_{n-1}, X_n.
    E_n: X_{n-3} -> ... -> X_1 -> X_{n-2}, X_1 -> X_{n-1} -> X_n.
    """
    x = [f"X{i}" for i in range(1, n + 1)]
    if family == "A":
        arrows = [(x[i], x[i - 1]) for i in range(1, n)]
    elif family == "D":
        arrows = [(x[i], x[i - 1]) for i in range(1, n - 2)]
        arrows += [(x[0], x[n - 2]), (x[0], x[n - 1])]
    elif family == "E":
        arrows = [(x[i], x[i - 1]) for i in range(1, n - 3)]
        arrows += [(x[0], x[n - 3]), (x[0], x[n - 2]), (x[n - 2], x[n - 1])]
    else:
        raise PreconditionError(f"unknown Dynkin family '{family}'")
    return DirectedTree(tuple(x), tuple(arrows))


def family_matrix(family: str, n: int) -> ImmutableMatrix:
    """Translation matrix of the family slice, read off a two-level ZB window."""
    tree = family_slice(family, n)
    window = zb_window(tree, range(0, 2))
    return translation_matrix(window, [zb_id(0, v) for v in tree.vertices])


def displayed_matrix(family: str, n: int) -> ImmutableMatrix:
    """The family matrices written out entry by entry."""
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        if family != "E" or i <= n - 4:
            if family != "D" or i <= n - 3:
                rows[i][i - 1] = 1
    if family == "A":
        rows[0] = [-1] * n
    elif family == "D":
        rows[0] = [1] * n
        rows[n - 2] = [-1] * (n - 1) + [0]
        rows[n - 1] = [-1] * (n - 2) + [0, -1]
    elif family == "E":
        rows[0] = [1] * (n - 1) + [0]
        rows[n - 3] = [-1] * (n - 2) + [0, 0]
        rows[n - 2] = [0] * (n - 1) + [1]
        rows[n - 1] = [-1] * (n - 3) + [0, -1, -1]
    else:
        raise PreconditionError(f"unknown Dynkin family '{family}'")
    return from_rows(rows)


@dataclass(frozen=True)
class IdentityCheck:
    statement: str
    passed: bool

    def __str__(self) -> str:
        return f"{self.statement}: {'PASS' if self.passed else 'FAIL'}"


def _odd_d_power(n: int) -> ImmutableMatrix:
    rows = [[-1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows[n - 2][n - 2] = rows[n - 1][n - 1] = 0
    rows[n - 2][n - 1] = rows[n - 1][n - 2] = -1
    return from_rows(rows)


def family_identities(text: str) -> list[IdentityCheck]:
    """Check the translation-matrix identities of one Dynkin family."""
    family, n = parse_family(text)
    m = family_matrix(family, n)
    name = f"M_{n}"
    checks = [
        IdentityCheck(
            f"{name} from slice = displayed {name}", m == displayed_matrix(family, n)
        )
    ]
    minus_id = -identity(n)
    if family == "A":
        checks.append(
            IdentityCheck(
                f"{name} e_{n} = -e_1",
                m * unit_vector(n, n - 1) == -unit_vector(n, 0),
            )
        )
    elif family == "D":
        power = matrix_power(m, n - 1)
        if n % 2 == 0:
            checks.append(IdentityCheck(f"{name}^{n - 1} = -Id", power == minus_id))
        else:
            checks.append(
                IdentityCheck(
                    f"{name}^{n - 1} = -Id with last two coordinates swapped",
                    power == _odd_d_power(n),
                )
            )
    elif n == 6:
        checks.append(
            IdentityCheck(
                f"{name}^6 e_1 = -e_1",
                matrix_power(m, 6) * unit_vector(n, 0) == -unit_vector(n, 0),
            )
        )
    else:
        k = 9 if n == 7 else 15
        checks.append(
            IdentityCheck(f"{name}^{k} = -Id", matrix_power(m, k) == minus_id)
        )
    for check in checks:
        logger.info(f"{check}")
    return checks
