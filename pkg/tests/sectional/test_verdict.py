"""Tests for component finiteness verdicts."""
from __future__ import annotations

from collections.abc import Callable

import pytest

from src.diagrams import DiagramTag, DiagramType
from src.knitting import KnitDirection, knit_hereditary
from src.quiver import Quiver, TranslationQuiver, parse_quiver
from src.sectional import Verdict, VerdictRule, finiteness_verdict
from src.tubes import (
    DirectedTree,
    coray_insertion,
    stable_tube,
    zb_quotient,
    zb_window,
)

A3_TREE = DirectedTree(("a", "b", "c"), (("a", "b"), ("b", "c")))

TRIANGLE = "vertices 1 2 3\narrows a:1->2 b:2->3 c:1->3"
SQUARE = "vertices 1 2 3 4\narrows a:1->2 b:2->3 c:3->4 d:1->4"
STAR = "vertices 0 1 2 3 4\narrows a:1->0 b:2->0 c:3->0 d:4->0"
E6_STAR = (
    "vertices 0 1 2 3 4 5 6\n"
    "arrows a:1->0 b:2->1 c:3->0 d:4->3 e:5->0 f:6->5"
)


class TestFinitenessVerdict:
    def test_closed_component(self, a3_window: TranslationQuiver) -> None:
        [verdict] = finiteness_verdict(a3_window)

        assert verdict.verdict is Verdict.FINITE
        assert verdict.rule is VerdictRule.CLOSED_COMPONENT
        assert str(verdict) == "A3: finite (closed-component)"

    def test_closed_stable_component_reports_its_type(self) -> None:
        [verdict] = finiteness_verdict(zb_quotient(A3_TREE, 4))

        assert verdict.rule is VerdictRule.DYNKIN_TYPE
        assert str(verdict) == "ZB/tau^4: finite (dynkin-subgraph-type) type A(3)"

    def test_window_with_a_dynkin_section(self) -> None:
        [verdict] = finiteness_verdict(zb_window(A3_TREE, range(0, 6)))

        assert verdict.verdict is Verdict.FINITE
        assert verdict.subgraph_type == DiagramType(DiagramTag.A, 3)

    def test_valued_arrows(self, load_quiver: Callable[[str], Quiver]) -> None:
        window = knit_hereditary(load_quiver("kronecker"), slice_cap=4)
        [verdict] = finiteness_verdict(window)

        assert verdict.verdict is Verdict.INFINITE
        assert str(verdict) == "knit-right: infinite (multiple-arrows)"

    def test_helical_component(
        self, load_window: Callable[[str], TranslationQuiver]
    ) -> None:
        [verdict] = finiteness_verdict(load_window("helical"))
        assert str(verdict) == "helical: infinite (helical-a-infinity) type A∞"

    def test_one_verdict_per_component(self) -> None:
        tree = DirectedTree(("a", "b"), (("a", "b"),))
        window = zb_quotient(tree, 2)
        far = zb_quotient(DirectedTree(("c",)), 2)
        merged = TranslationQuiver(
            window.vertices + far.vertices,
            window.arrows + far.arrows,
            window.translation + far.translation,
            name="pair",
        )
        names = [v.component for v in finiteness_verdict(merged)]
        assert names == ["pair#0", "pair#1"]


class TestEuclideanKnits:
    @pytest.mark.parametrize("direction", list(KnitDirection))
    @pytest.mark.parametrize("cap", [8, 16])
    @pytest.mark.parametrize("source,n", [(TRIANGLE, 2), (SQUARE, 3)])
    def test_cycle_quivers_are_infinite(
        self, source: str, n: int, cap: int, direction: KnitDirection
    ) -> None:
        window = knit_hereditary(parse_quiver(source), direction, slice_cap=cap)
        [verdict] = finiteness_verdict(window)

        assert verdict.verdict is Verdict.INFINITE
        assert verdict.rule is VerdictRule.EUCLIDEAN
        assert verdict.subgraph_type is not None
        assert verdict.subgraph_type.tag is DiagramTag.A_TILDE
        assert verdict.subgraph_type.n == n

    def test_triangle_report(self) -> None:
        window = knit_hereditary(parse_quiver(TRIANGLE), slice_cap=8)
        [verdict] = finiteness_verdict(window)

        assert str(verdict) == (
            "knit-right: infinite (euclidean-sectional-subgraph) type Ã(2)"
        )

    def test_short_knit_is_still_infinite(self) -> None:
        window = knit_hereditary(parse_quiver(SQUARE), slice_cap=4)
        [verdict] = finiteness_verdict(window)

        assert verdict.verdict is Verdict.INFINITE

    @pytest.mark.parametrize("direction", list(KnitDirection))
    @pytest.mark.parametrize(
        "source,tag", [(STAR, DiagramTag.D_TILDE), (E6_STAR, DiagramTag.E6_TILDE)]
    )
    def test_star_quivers_are_infinite(
        self, source: str, tag: DiagramTag, direction: KnitDirection
    ) -> None:
        window = knit_hereditary(parse_quiver(source), direction, slice_cap=8)
        [verdict] = finiteness_verdict(window)

        assert verdict.verdict is Verdict.INFINITE
        assert verdict.rule is VerdictRule.EUCLIDEAN
        assert verdict.subgraph_type is not None
        assert verdict.subgraph_type.tag is tag


class TestInsertedTubes:
    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("rank", [1, 2, 3])
    def test_coray_tubes_are_helical(self, rank: int, n: int) -> None:
        tube = coray_insertion(stable_tube(rank, n + 6), "t0_1", n)
        [verdict] = finiteness_verdict(tube)

        assert verdict.verdict is Verdict.INFINITE
        assert verdict.rule is VerdictRule.HELICAL
        assert verdict.subgraph_type == DiagramType(DiagramTag.A_INFINITY)
