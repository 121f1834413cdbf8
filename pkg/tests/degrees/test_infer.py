"""Tests for left and right degree bounds."""
from __future__ import annotations

from collections.abc import Mapping
from typing import Any

import pytest

from src.core.errors import PreconditionError
from src.degrees import (
    DegreeBound,
    DegreeKind,
    DegreeRule,
    Side,
    infer_degrees,
    infer_global_left_degree,
    infer_left_degree,
    infer_right_degree,
)
from src.quiver import ARVertex, OneArrow, TranslationQuiver
from src.tubes import DirectedTree, stable_tube, zb_window


def open_window(
    arrows: list[tuple[str, str]], metadata: Mapping[str, Any]
) -> TranslationQuiver:
    ids = sorted({v for a in arrows for v in a})
    return TranslationQuiver(
        tuple(ARVertex(id=v, label=v, mesh_complete=False) for v in ids),
        tuple(OneArrow(s, t) for s, t in arrows),
        metadata=dict(metadata),
    )


class TestLeftDegree:
    def test_single_middle_term_is_surjective(
        self, a3_window: TranslationQuiver
    ) -> None:
        bound = infer_left_degree(a3_window, "I2", "I1")

        assert bound.kind is DegreeKind.EXACTLY_ONE
        assert bound.certificate.rule is DegreeRule.SURJECTIVE_MESH
        assert str(bound) == (
            "I2->I1 left degree 1 [r1-single-middle-term via S2 -> I2 -> I1 "
            "(l(I2)=2 > l(I1)=1)]"
        )

    def test_presectional_path_gives_lower_bound(
        self, a3_window: TranslationQuiver
    ) -> None:
        bound = infer_left_degree(a3_window, "P1", "I2")

        assert bound.kind is DegreeKind.AT_LEAST
        assert bound.n == 2
        assert str(bound) == (
            "P1->I2 left degree >= 2 [r2-presectional-path via S2 -> I2]"
        )

    def test_all_arrows_in_canonical_order(
        self, a3_window: TranslationQuiver
    ) -> None:
        kinds = [b.kind for b in infer_degrees(a3_window)]

        assert kinds == [
            DegreeKind.UNKNOWN,
            DegreeKind.UNKNOWN,
            DegreeKind.EXACTLY_ONE,
            DegreeKind.AT_LEAST,
            DegreeKind.UNKNOWN,
            DegreeKind.EXACTLY_ONE,
        ]

    def test_declared_infinite_path(self) -> None:
        window = open_window(
            [("A", "B"), ("U", "B")], {"infinite_paths": [["U", "B"]]}
        )
        bound = infer_left_degree(window, "A", "B")

        assert bound.kind is DegreeKind.INFINITE
        assert bound.certificate.rule is DegreeRule.INFINITE_PATH
        assert bound.certificate.witness == ("U", "B")
        assert bound.value == "inf"

    def test_undeclared_path_stays_finite(self) -> None:
        window = open_window([("A", "B"), ("U", "B")], {})
        bound = infer_left_degree(window, "A", "B")

        assert bound.kind is DegreeKind.AT_LEAST
        assert bound.n == 2

    def test_tube_boundary_certifies_infinity(self) -> None:
        bound = infer_left_degree(stable_tube(2, 4), "t0_1", "t1_2")

        assert bound.kind is DegreeKind.INFINITE
        assert bound.certificate.witness == ("t1_4", "t1_3", "t1_2")
        assert "recognised tube" in bound.certificate.note

    def test_missing_arrow(self, a3_window: TranslationQuiver) -> None:
        with pytest.raises(PreconditionError, match="no arrow"):
            infer_left_degree(a3_window, "P3", "I1")


class TestRightDegree:
    def test_injective_map_from_simple_projective(
        self, a3_window: TranslationQuiver
    ) -> None:
        bound = infer_right_degree(a3_window, "P3", "P2")

        assert bound.side is Side.RIGHT
        assert bound.kind is DegreeKind.EXACTLY_ONE
        assert str(bound) == (
            "P3->P2 right degree 1 [r1-single-middle-term via P3 -> P2 -> S2 "
            "(l(P2)=2 > l(P3)=1)]"
        )

    def test_infer_degrees_agrees(self, a3_window: TranslationQuiver) -> None:
        bounds = infer_degrees(a3_window, Side.RIGHT)
        assert bounds[0] == infer_right_degree(a3_window, "P3", "P2")

    def test_declared_right_infinite_path(self) -> None:
        window = open_window(
            [("X", "Z"), ("X", "W")], {"infinite_right_paths": [["X", "W"]]}
        )
        bound = infer_right_degree(window, "X", "Z")

        assert (bound.source, bound.target) == ("X", "Z")
        assert bound.kind is DegreeKind.INFINITE
        assert bound.certificate.witness == ("X", "W")
        assert infer_left_degree(window, "X", "Z").kind is DegreeKind.UNKNOWN


class TestGlobalLeftDegree:
    def test_every_shift_infinite_in_a_tube(self) -> None:
        bound = infer_global_left_degree(stable_tube(2, 4), "t0_1", "t1_2")

        assert bound.kind is DegreeKind.INFINITE
        assert str(bound) == (
            "t0_1->t1_2 left degree inf [tau-shift-fold via t0_1 -> t1_2 "
            "(all 2 shifts are infinite)]"
        )

    def test_two_merging_infinite_paths(self) -> None:
        window = open_window(
            [("X", "Z"), ("Y", "Z")], {"infinite_paths": [["X", "Z"], ["Y", "Z"]]}
        )
        bound = infer_global_left_degree(window, "X", "Z")

        assert bound.kind is DegreeKind.INFINITE
        assert bound.certificate.rule is DegreeRule.TWO_INFINITE_PATHS
        assert bound.certificate.note.startswith("merges with")

    def test_orbit_leaving_the_window(self) -> None:
        window = zb_window(DirectedTree(("a", "b"), (("a", "b"),)), range(3))
        bound = infer_global_left_degree(window, "(1,a)", "(1,b)")

        assert bound.kind is DegreeKind.UNKNOWN
        assert "leaves the window" in bound.certificate.note

    def test_requires_left_stable_endpoints(
        self, a3_window: TranslationQuiver
    ) -> None:
        with pytest.raises(PreconditionError, match="not left stable"):
            infer_global_left_degree(a3_window, "P2", "S2")

    def test_requires_the_arrow(self, a3_window: TranslationQuiver) -> None:
        with pytest.raises(PreconditionError, match="no arrow"):
            infer_global_left_degree(a3_window, "S2", "I1")


def right_chain(k: int, declared: bool) -> TranslationQuiver:
    """B -> A beside the path B -> X1 -> ... -> Xk."""
    ids = ["B"] + [f"X{i}" for i in range(1, k + 1)]
    metadata = {"infinite_right_paths": [ids[:3]]} if declared else {}
    return open_window([("B", "A"), *zip(ids, ids[1:])], metadata)


def strength(bound: DegreeBound) -> float:
    if bound.kind is DegreeKind.INFINITE:
        return float("inf")
    if bound.kind is DegreeKind.AT_LEAST:
        assert bound.n is not None
        return bound.n
    return 0


class TestEnlargingWindows:
    def test_right_bounds_never_weaken(self) -> None:
        windows = [right_chain(k, declared=k >= 4) for k in range(7)]
        bounds = [infer_right_degree(w, "B", "A") for w in windows]
        values = [strength(b) for b in bounds]

        assert bounds[0].kind is DegreeKind.UNKNOWN
        assert values == [0, 2, 3, 4] + [float("inf")] * 3
        assert values == sorted(values)

    def test_infinite_stays_infinite(self) -> None:
        for k in range(2, 8):
            bound = infer_right_degree(right_chain(k, declared=True), "B", "A")

            assert bound.kind is DegreeKind.INFINITE
            assert bound.certificate.witness[:2] == ("B", "X1")
