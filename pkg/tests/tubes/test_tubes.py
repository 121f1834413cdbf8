"""Tests for stable tubes, coray and ray insertions and tube recognition."""
from __future__ import annotations

from collections.abc import Callable

import pytest

from src.core.errors import NotCorayVertexError, PreconditionError, WindowTooSmallError
from src.quiver import TranslationQuiver, validate
from src.tubes import (
    TubeParams,
    coray_insertion,
    coray_of,
    insert_many,
    is_coray_vertex,
    mouth,
    ray_insertion,
    recognize_tube,
    same_shape,
    stable_tube,
    tube_id,
    zb_quotient,
)
from src.tubes.zb import DirectedTree


class TestStableTube:
    def test_sizes_and_mouth(self) -> None:
        tube = stable_tube(2, 3)

        assert len(tube) == 6
        assert mouth(tube) == ["t0_1", "t1_1"]
        assert tube.tau("t1_2") == "t0_2"
        assert not tube.vertex("t0_3").mesh_complete

    def test_rank_one(self) -> None:
        tube = stable_tube(1, 4)

        assert mouth(tube) == ["t0_1"]
        assert tube.tau("t0_2") == "t0_2"
        assert not validate(tube).errors

    @pytest.mark.parametrize("rank,height", [(0, 3), (2, 0)])
    def test_bad_sizes(self, rank: int, height: int) -> None:
        with pytest.raises(PreconditionError):
            stable_tube(rank, height)

    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    def test_recognised(self, rank: int) -> None:
        params = recognize_tube(stable_tube(rank, 5))

        assert params == TubeParams(rank)
        assert str(params) == f"stable tube of rank {rank}"


class TestCoray:
    def test_mouth_vertex(self) -> None:
        tube = stable_tube(2, 5)
        coray = coray_of(tube, "t0_1")

        assert coray.members == ("t0_1", "t0_2", "t0_3", "t0_4", "t0_5")
        assert len(coray) == 5

    def test_two_paths_of_one_length(self) -> None:
        assert not is_coray_vertex(stable_tube(2, 5), "t0_2")

    def test_coray_stopping_inside_the_window(
        self, a3_window: TranslationQuiver
    ) -> None:
        with pytest.raises(NotCorayVertexError, match="inside"):
            coray_of(a3_window, "I1")

    def test_nothing_ends_there(self, a3_window: TranslationQuiver) -> None:
        with pytest.raises(NotCorayVertexError, match="no arrow"):
            coray_of(a3_window, "P3")


class TestInsertion:
    def test_helical_component_is_an_insertion(
        self, load_window: Callable[[str], TranslationQuiver]
    ) -> None:
        inserted = coray_insertion(stable_tube(1, 5), "t0_1", 1)
        helical = load_window("helical")

        assert len(inserted) == 10
        assert len(inserted.arrows) == 17
        assert same_shape(inserted, helical)
        assert recognize_tube(helical) == TubeParams(1, (1,))
        assert str(recognize_tube(helical)) == "coray tube (ZA_inf/tau^1)[1]"

    def test_new_vertices(self) -> None:
        inserted = coray_insertion(stable_tube(2, 6), "t0_1", 2)

        injective = [v.id for v in inserted.vertices if v.ext_injective]
        assert injective == ["t0_1+(1,1)", "t0_1+(2,1)"]
        assert inserted.tau("t0_1") == "t0_1+(3,1)"
        assert inserted.tau("t0_1+(1,1)") == "t0_1+(1,2)"
        assert inserted.tau("t0_1+(1,2)") == tube_id(1, 1)
        assert not validate(inserted).errors

    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_coray_tube_round_trip(self, rank: int, n: int) -> None:
        inserted = coray_insertion(stable_tube(rank, n + 6), "t0_1", n)
        assert recognize_tube(inserted) == TubeParams(rank, (n,))

    @pytest.mark.parametrize("rank,n", [(1, 1), (2, 1), (2, 2), (3, 1)])
    def test_ray_tube_round_trip(self, rank: int, n: int) -> None:
        inserted = ray_insertion(stable_tube(rank, n + 6), "t0_1", n)

        assert any(v.projective for v in inserted.vertices)
        assert not any(v.ext_injective for v in inserted.vertices)
        assert recognize_tube(inserted) == TubeParams(rank, (n,), ray=True)

    def test_insert_many_with_one_step(self) -> None:
        tube = stable_tube(2, 6)
        assert same_shape(
            insert_many(tube, [("t0_1", 2)]), coray_insertion(tube, "t0_1", 2)
        )

    def test_coray_too_short(self) -> None:
        with pytest.raises(WindowTooSmallError):
            coray_insertion(stable_tube(1, 3), "t0_1", 3)

    @pytest.mark.parametrize("insert", [coray_insertion, ray_insertion])
    @pytest.mark.parametrize("n", [0, -2])
    def test_size_must_be_positive(
        self,
        insert: Callable[[TranslationQuiver, str, int], TranslationQuiver],
        n: int,
    ) -> None:
        with pytest.raises(PreconditionError, match="positive"):
            insert(stable_tube(1, 3), "t0_1", n)

    def test_not_a_coray_vertex(self) -> None:
        with pytest.raises(NotCorayVertexError):
            coray_insertion(stable_tube(2, 5), "t0_2", 1)


class TestRecognition:
    def test_closed_quotient_is_no_tube(self) -> None:
        tree = DirectedTree(("a", "b"), (("a", "b"),))
        assert recognize_tube(zb_quotient(tree, 3)) is None

    def test_finite_component_is_no_tube(self, a3_window: TranslationQuiver) -> None:
        assert recognize_tube(a3_window) is None

    def test_same_shape_distinguishes_ranks(self) -> None:
        assert same_shape(stable_tube(2, 3), stable_tube(2, 3))
        assert not same_shape(stable_tube(2, 3), stable_tube(3, 2))
