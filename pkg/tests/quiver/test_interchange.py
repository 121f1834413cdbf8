"""Tests for the YAML interchange format of translation-quiver windows."""
from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import pytest

from src.core.errors import InterchangeError, UnknownVertexError
from src.quiver import (
    TranslationQuiver,
    ar_quiver_from_data,
    dump_ar_quiver,
    load_ar_quiver,
    parse_ar_quiver,
    save_ar_quiver,
)
from tests.conftest import AR_FIXTURES


class TestLoad:
    def test_a3_window(self, a3_window: TranslationQuiver) -> None:
        assert a3_window.name == "A3"
        assert a3_window.ids == ["P3", "P2", "P1", "S2", "I2", "I1"]
        assert a3_window.vertex("P1").dim == (1, 1, 1)
        assert a3_window.vertex("P1").projective
        assert a3_window.vertex("P1").ext_injective
        assert a3_window.tau("I1") == "S2"
        assert a3_window.tau_inv("P2") == "I2"
        assert a3_window.preds("I2") == {"P1": 1, "S2": 1}

    def test_valued_arrows(
        self, load_window: Callable[[str], TranslationQuiver]
    ) -> None:
        window = load_window("window41")
        assert window.valuation("I2", "I1") == 2
        assert window.valuation("I2", "I3") == 1
        assert window.valuation("I1", "I2") == 0

    def test_defaults(self) -> None:
        tq = parse_ar_quiver("vertices:\n  - {id: A}\n")
        v = tq.vertex("A")
        assert v.label == "A"
        assert v.dim is None
        assert not v.projective and not v.ext_injective
        assert v.mesh_complete

    def test_label_falls_back_to_the_id(self) -> None:
        tq = ar_quiver_from_data(
            {"vertices": [{"id": "A", "label": None}, {"id": "B", "label": 7}]}
        )

        assert tq.vertex("A").label == "A"
        assert tq.vertex("B").label == "7"

    def test_empty_document(self) -> None:
        assert len(parse_ar_quiver("")) == 0


class TestRoundTrip:
    @pytest.mark.parametrize("name", AR_FIXTURES)
    def test_parse_dump_parse(
        self, name: str, load_window: Callable[[str], TranslationQuiver]
    ) -> None:
        window = load_window(name)
        assert parse_ar_quiver(dump_ar_quiver(window)) == window

    def test_dump_is_deterministic(self, a3_window: TranslationQuiver) -> None:
        assert dump_ar_quiver(a3_window) == dump_ar_quiver(a3_window)

    def test_save_and_load(self, a3_window: TranslationQuiver, tmp_path: Path) -> None:
        path = tmp_path / "out" / "a3.ar.yaml"
        save_ar_quiver(a3_window, path)
        assert load_ar_quiver(path) == a3_window

    def test_metadata_survives(self) -> None:
        tq = ar_quiver_from_data(
            {"vertices": [{"id": "A"}], "metadata": {"truncated": True}}
        )
        assert parse_ar_quiver(dump_ar_quiver(tq)).metadata == {"truncated": True}


class TestErrors:
    def test_malformed_yaml(self) -> None:
        with pytest.raises(InterchangeError, match="malformed"):
            parse_ar_quiver("vertices: [")

    def test_document_must_be_a_mapping(self) -> None:
        with pytest.raises(InterchangeError):
            parse_ar_quiver("- 1\n- 2\n")

    def test_missing_vertex_id(self) -> None:
        with pytest.raises(InterchangeError, match="missing field 'id'"):
            ar_quiver_from_data({"vertices": [{"label": "A"}]})

    def test_negative_dimension(self) -> None:
        with pytest.raises(InterchangeError, match="dim"):
            ar_quiver_from_data({"vertices": [{"id": "A", "dim": [1, -1]}]})

    @pytest.mark.parametrize(
        "field,value",
        [("projective", "false"), ("ext_injective", 1), ("mesh_complete", None)],
    )
    def test_flags_must_be_booleans(self, field: str, value: object) -> None:
        with pytest.raises(InterchangeError, match=f"vertex 'A': {field}"):
            ar_quiver_from_data({"vertices": [{"id": "A", field: value}]})

    def test_length_must_be_an_integer(self) -> None:
        with pytest.raises(InterchangeError, match="length"):
            ar_quiver_from_data({"vertices": [{"id": "A", "length": "3"}]})

    def test_duplicate_vertex(self) -> None:
        with pytest.raises(InterchangeError, match="duplicate"):
            ar_quiver_from_data({"vertices": [{"id": "A"}, {"id": "A"}]})

    def test_arrow_to_unknown_vertex(self) -> None:
        with pytest.raises(UnknownVertexError):
            ar_quiver_from_data(
                {"vertices": [{"id": "A"}], "arrows": [{"source": "A", "target": "B"}]}
            )

    def test_translation_on_projective(self) -> None:
        with pytest.raises(InterchangeError, match="projective"):
            ar_quiver_from_data(
                {
                    "vertices": [{"id": "A", "projective": True}, {"id": "B"}],
                    "translation": [{"vertex": "A", "tau": "B"}],
                }
            )

    def test_translation_must_be_injective(self) -> None:
        with pytest.raises(InterchangeError, match="not injective"):
            ar_quiver_from_data(
                {
                    "vertices": [{"id": "A"}, {"id": "B"}, {"id": "C"}],
                    "translation": [
                        {"vertex": "A", "tau": "C"},
                        {"vertex": "B", "tau": "C"},
                    ],
                }
            )

    def test_zero_valuation(self) -> None:
        with pytest.raises(InterchangeError, match="valuation"):
            ar_quiver_from_data(
                {
                    "vertices": [{"id": "A"}, {"id": "B"}],
                    "arrows": [{"source": "A", "target": "B", "valuation": 0}],
                }
            )
