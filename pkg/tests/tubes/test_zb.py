"""Tests for directed trees, ZB windows and quotients, and tree types."""
from __future__ import annotations

import random

import pytest

from src.core.config import RandomConfig
from src.core.errors import PreconditionError
from src.diagrams import DiagramTag, DiagramType, catalog_graph, iter_catalog
from src.quiver import TranslationQuiver, validate
from src.sectional import full_sectional_subgraph, subgraph_type
from src.tubes import DirectedTree, tree_type, zb_id, zb_quotient, zb_window

A3_TREE = DirectedTree(("a", "b", "c"), (("a", "b"), ("b", "c")))
D4_TREE = DirectedTree(
    ("c", "x", "y", "z"), (("x", "c"), ("y", "c"), ("z", "c")), root="c"
)

SEED = RandomConfig().seed
DYNKIN_TYPES = [t for t in iter_catalog(8) if t.is_dynkin]


def random_dynkin_tree(rng: random.Random) -> tuple[DirectedTree, DiagramType]:
    """Catalog Dynkin graph with every edge oriented at random."""
    dtype = rng.choice(DYNKIN_TYPES)
    graph = catalog_graph(dtype)
    arrows = tuple(
        (u, v) if rng.random() < 0.5 else (v, u) for u, v, _ in graph.edges
    )
    return DirectedTree(graph.vertices, arrows), dtype


class TestDirectedTree:
    @pytest.mark.parametrize(
        "vertices,arrows",
        [
            ((), ()),
            (("a", "a"), ()),
            (("a",), (("a", "a"),)),
            (("a", "b"), (("a", "b"), ("b", "a"))),
            (("a", "b", "c"), (("a", "b"),)),
            (("a",), (("a", "z"),)),
        ],
    )
    def test_rejected(
        self, vertices: tuple[str, ...], arrows: tuple[tuple[str, str], ...]
    ) -> None:
        with pytest.raises(PreconditionError):
            DirectedTree(vertices, arrows)

    def test_opposite(self) -> None:
        assert A3_TREE.opposite().arrows == (("b", "a"), ("c", "b"))


class TestZBWindow:
    def test_arrows_and_translation(self) -> None:
        window = zb_window(A3_TREE, range(0, 3))

        assert len(window) == 9
        assert window.valuation(zb_id(1, "a"), zb_id(1, "b")) == 1
        assert window.valuation(zb_id(1, "b"), zb_id(0, "a")) == 1
        assert window.tau(zb_id(0, "c")) == zb_id(1, "c")
        assert window.tau(zb_id(2, "c")) is None
        assert not window.vertex(zb_id(2, "a")).mesh_complete
        assert not validate(window).errors

    def test_empty_range(self) -> None:
        with pytest.raises(PreconditionError):
            zb_window(A3_TREE, [])

    def test_quotient_is_closed(self) -> None:
        quotient = zb_quotient(A3_TREE, 3)

        assert len(quotient) == 9
        assert quotient.tau(zb_id(2, "a")) == zb_id(0, "a")
        assert not any(quotient.is_boundary(v) for v in quotient.ids)
        assert not validate(quotient).errors

    def test_quotient_period(self) -> None:
        with pytest.raises(PreconditionError):
            zb_quotient(A3_TREE, 0)


class TestTreeType:
    @pytest.mark.parametrize("start", ["a", "c"])
    def test_a3_window(self, start: str) -> None:
        window = zb_window(A3_TREE, range(0, 6))
        found = tree_type(window, zb_id(3, start))

        assert found.reading == DiagramType(DiagramTag.A, 3)
        assert not found.truncated
        assert str(found) == "tree type A(3) on 3 vertices"

    def test_tree_matches_the_section_of_a_quotient(self) -> None:
        quotient = zb_quotient(D4_TREE, 5)
        found = tree_type(quotient, zb_id(0, "c"))
        section = full_sectional_subgraph(quotient, zb_id(0, "c"))

        assert found.reading == DiagramType(DiagramTag.D, 4)
        assert subgraph_type(section) == found.reading

    def test_window_edge_leaves_open_vertices(self) -> None:
        window = zb_window(A3_TREE, range(0, 6))
        found = tree_type(window, zb_id(0, "c"))

        assert found.truncated
        assert zb_id(0, "c") in found.open_vertices

    def test_requires_a_stable_window(self, a3_window: TranslationQuiver) -> None:
        with pytest.raises(PreconditionError, match="not stable"):
            tree_type(a3_window, "S2")

    def test_random_quotients_read_back_their_tree(self) -> None:
        rng = random.Random(SEED)
        for _ in range(50):
            tree, dtype = random_dynkin_tree(rng)
            k = rng.randint(2, 7)
            quotient = zb_quotient(tree, k)
            found = tree_type(quotient, zb_id(0, rng.choice(tree.vertices)))
            seed = zb_id(rng.randrange(k), rng.choice(tree.vertices))
            section = full_sectional_subgraph(quotient, seed)

            assert not validate(quotient).errors
            assert found.reading == dtype
            assert subgraph_type(section) == dtype
