"""Tests for diagram classification against the Dynkin and Euclidean catalog."""
from __future__ import annotations

import random
from pathlib import Path

import pytest

from src.core.config import RandomConfig
from src.core.errors import PreconditionError, QuiverSyntaxError
from src.diagrams import (
    DiagramTag,
    DiagramType,
    UndirectedGraph,
    catalog_graph,
    classify,
    contains_euclidean,
    cycle_graph,
    infinite_reading,
    iter_catalog,
    parse_graph,
    path_graph,
    star_graph,
)

CATALOG = list(iter_catalog(12))
SEED = RandomConfig().seed


def relabelled(graph: UndirectedGraph, rng: random.Random) -> UndirectedGraph:
    """Same graph under fresh names, shuffled orders and flipped edges."""
    names = [f"x{i}" for i in range(len(graph.vertices))]
    rng.shuffle(names)
    rename = dict(zip(graph.vertices, names))
    edges = [
        (rename[u], rename[v], m) if rng.random() < 0.5 else (rename[v], rename[u], m)
        for u, v, m in graph.edges
    ]
    rng.shuffle(edges)
    vertices = list(rename.values())
    rng.shuffle(vertices)
    return UndirectedGraph(tuple(vertices), tuple(edges))


class TestParseGraph:
    def test_edges_comments_and_isolated_vertices(self) -> None:
        g = parse_graph("a b\nb c 2  # double\n\nd\n")

        assert g.vertices == ("a", "b", "c", "d")
        assert g.multiplicity("b", "c") == 2
        assert g.neighbors("b") == ["a", "c"]
        assert g.neighbors("d") == []

    def test_too_many_fields(self) -> None:
        with pytest.raises(QuiverSyntaxError) as excinfo:
            parse_graph("a b\na b c d")
        assert excinfo.value.line == 2

    def test_bad_multiplicity(self) -> None:
        with pytest.raises(QuiverSyntaxError, match="multiplicity"):
            parse_graph("a b x")

    def test_fixture_cycle(self, fixtures_dir: Path) -> None:
        g = parse_graph((fixtures_dir / "cycle4.g").read_text(encoding="utf-8"))
        assert str(classify(g)) == "Ã(3)"


class TestClassify:
    @pytest.mark.parametrize("dtype", CATALOG, ids=str)
    def test_catalog_graphs_classify_to_themselves(self, dtype: DiagramType) -> None:
        assert classify(catalog_graph(dtype)) == dtype

    def test_relabelling_keeps_the_type(self) -> None:
        rng = random.Random(SEED)
        for dtype in CATALOG:
            for _ in range(3):
                assert classify(relabelled(catalog_graph(dtype), rng)) == dtype

    @pytest.mark.parametrize(
        "arms,expected",
        [
            ((1, 1, 1), DiagramType(DiagramTag.D, 4)),
            ((1, 1, 5), DiagramType(DiagramTag.D, 8)),
            ((1, 2, 2), DiagramType(DiagramTag.E6)),
            ((1, 2, 4), DiagramType(DiagramTag.E8)),
            ((2, 2, 2), DiagramType(DiagramTag.E6_TILDE)),
            ((1, 1, 1, 1), DiagramType(DiagramTag.D_TILDE, 4)),
            ((1, 2, 6), DiagramType(DiagramTag.OTHER)),
            ((2, 2, 3), DiagramType(DiagramTag.OTHER)),
            ((1, 1, 1, 1, 1), DiagramType(DiagramTag.OTHER)),
        ],
    )
    def test_stars(self, arms: tuple[int, ...], expected: DiagramType) -> None:
        assert classify(star_graph(arms)) == expected

    def test_display_strings(self) -> None:
        assert str(DiagramType(DiagramTag.A, 3)) == "A(3)"
        assert str(DiagramType(DiagramTag.D_TILDE, 5)) == "D̃(5)"
        assert str(DiagramType(DiagramTag.E8_TILDE)) == "Ẽ8"
        assert str(DiagramType(DiagramTag.A_INFINITY)) == "A∞"

    def test_double_edge_is_kronecker_only_on_two_vertices(self) -> None:
        assert classify(cycle_graph(2)) == DiagramType(DiagramTag.A_TILDE, 1)
        g = UndirectedGraph.from_edges([("a", "b", 2), ("b", "c")])
        assert classify(g).tag is DiagramTag.OTHER

    def test_triple_edge_loop_and_disconnected_are_other(self) -> None:
        triple = UndirectedGraph.from_edges([("a", "b", 3)])
        looped = UndirectedGraph.from_edges([("a", "a")])
        assert classify(triple).tag is DiagramTag.OTHER
        assert classify(looped).tag is DiagramTag.OTHER
        assert classify(UndirectedGraph(("a", "b"))).tag is DiagramTag.OTHER

    def test_empty_graph_is_other(self) -> None:
        assert classify(UndirectedGraph(())).tag is DiagramTag.OTHER

    def test_type_flags(self) -> None:
        assert DiagramType(DiagramTag.E7).is_dynkin
        assert DiagramType(DiagramTag.A_TILDE, 2).is_euclidean
        assert DiagramType(DiagramTag.D_INFINITY).is_infinite
        assert DiagramType(DiagramTag.A, 2).opened().boundary_open


class TestInfiniteReading:
    def test_path_open_at_one_end(self) -> None:
        g = path_graph(3)
        assert infinite_reading(g, ["v2"]).tag is DiagramTag.A_INFINITY

    def test_path_open_at_both_ends(self) -> None:
        g = path_graph(3)
        reading = infinite_reading(g, ["v0", "v2"])
        assert reading.tag is DiagramTag.A_INFINITY_INFINITY

    def test_d_shape_open_on_the_long_arm(self) -> None:
        g = star_graph((1, 1, 3))
        assert infinite_reading(g, ["v5"]).tag is DiagramTag.D_INFINITY

    def test_closed_graph_keeps_its_type(self) -> None:
        g = star_graph((1, 2, 2))
        assert infinite_reading(g, []) == DiagramType(DiagramTag.E6)

    def test_other_open_vertex_only_flags(self) -> None:
        reading = infinite_reading(star_graph((1, 2, 2)), ["v1"])
        assert reading == DiagramType(DiagramTag.E6, boundary_open=True)


class TestContainsEuclidean:
    @pytest.mark.parametrize("dtype", [t for t in CATALOG if t.is_dynkin], ids=str)
    def test_dynkin_graphs_have_none(self, dtype: DiagramType) -> None:
        assert not contains_euclidean(catalog_graph(dtype)).found

    def test_cycle_is_its_own_witness(self) -> None:
        answer = contains_euclidean(cycle_graph(4))

        assert answer.found
        assert answer.diagram == DiagramType(DiagramTag.A_TILDE, 3)

    def test_long_star_contains_e6_tilde(self) -> None:
        answer = contains_euclidean(star_graph((2, 2, 3)))
        assert answer.diagram == DiagramType(DiagramTag.E6_TILDE)

    def test_double_edge_inside_a_larger_graph(self) -> None:
        g = UndirectedGraph.from_edges([("a", "b"), ("b", "c", 2)])
        answer = contains_euclidean(g)

        assert answer.diagram == DiagramType(DiagramTag.A_TILDE, 1)
        assert answer.witness is not None
        assert answer.witness.vertices == ("b", "c")

    def test_two_branch_points(self) -> None:
        g = UndirectedGraph.from_edges(
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("b", "x"), ("d", "y")]
        )
        answer = contains_euclidean(g)
        assert answer.diagram is not None
        assert answer.diagram.tag is DiagramTag.D_TILDE

    def test_every_component_is_searched(self) -> None:
        g = UndirectedGraph.from_edges(
            [("a", "b"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "c")]
        )
        answer = contains_euclidean(g)
        assert answer.diagram == DiagramType(DiagramTag.A_TILDE, 3)

    def test_loops_are_rejected(self) -> None:
        with pytest.raises(PreconditionError):
            contains_euclidean(UndirectedGraph.from_edges([("a", "a")]))
