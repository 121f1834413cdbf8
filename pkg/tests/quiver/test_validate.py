"""Tests for translation-quiver validation."""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import replace
from pathlib import Path

import pytest

from src.quiver import (
    ARVertex,
    FindingRule,
    OneArrow,
    Severity,
    TranslationQuiver,
    load_ar_quiver,
    sectional_cycles,
    validate,
)
from tests.conftest import AR_FIXTURES, CORRUPT_FIXTURES


def _open(
    vid: str,
    dim: tuple[int, ...] | None = None,
    length: int | None = None,
    projective: bool = False,
) -> ARVertex:
    return ARVertex(
        id=vid,
        label=vid,
        dim=dim,
        length=length,
        projective=projective,
        mesh_complete=False,
    )


class TestFixtures:
    @pytest.mark.parametrize("name", AR_FIXTURES)
    def test_fixture_has_no_errors(
        self, name: str, load_window: Callable[[str], TranslationQuiver]
    ) -> None:
        report = validate(load_window(name))
        assert report.errors == []

    @pytest.mark.parametrize("name", CORRUPT_FIXTURES)
    def test_corrupt_variant_fails_additivity(
        self, name: str, fixtures_dir: Path
    ) -> None:
        report = validate(load_ar_quiver(fixtures_dir / f"{name}.corrupt.ar.yaml"))

        assert report.errors
        assert {f.rule for f in report.errors} == {FindingRule.ADDITIVITY}

    def test_a3_corrupt_names_the_broken_meshes(self, fixtures_dir: Path) -> None:
        report = validate(load_ar_quiver(fixtures_dir / "a3.corrupt.ar.yaml"))
        assert sorted(f.ids[0] for f in report.errors) == ["I1", "I2", "S2"]

    def test_clean_report_text(self, a3_window: TranslationQuiver) -> None:
        assert str(validate(a3_window)) == "OK: no findings"


class TestMeshRules:
    def test_missing_arrow_breaks_the_mesh(self, a3_window: TranslationQuiver) -> None:
        arrows = tuple(
            a for a in a3_window.arrows if (a.source, a.target) != ("S2", "I2")
        )
        report = validate(replace(a3_window, arrows=arrows))
        assert FindingRule.MESH in report.rules()

    def test_translate_outside_the_window_is_a_warning(self) -> None:
        tq = TranslationQuiver((ARVertex(id="A", label="A"),))
        report = validate(tq)

        assert not report.errors
        assert [f.rule for f in report.warnings] == [FindingRule.MISSING_TRANSLATE]
        assert report.warnings[0].ids == ("A",)
        assert "outside the window" in report.warnings[0].message

    def test_incomplete_mesh_is_skipped(self) -> None:
        tq = TranslationQuiver((_open("A"),))
        assert not validate(tq)

    def test_length_against_dimension_vector(self) -> None:
        tq = TranslationQuiver((_open("A", dim=(1, 0), length=5),))
        report = validate(tq)
        assert [f.rule for f in report.errors] == [FindingRule.LENGTH]

    def test_lengths_checked_without_dimension_vectors(self) -> None:
        vertices = (
            ARVertex(id="T", label="T", length=1, mesh_complete=False),
            ARVertex(id="M", label="M", length=2, mesh_complete=False),
            ARVertex(id="Z", label="Z", length=2),
        )
        tq = TranslationQuiver(
            vertices, (OneArrow("T", "M"), OneArrow("M", "Z")), (("Z", "T"),)
        )
        report = validate(tq)
        assert [f.rule for f in report.errors] == [FindingRule.ADDITIVITY]

    def test_mixed_dimension_sizes(self) -> None:
        vertices = (
            ARVertex(id="T", label="T", dim=(1,), mesh_complete=False),
            ARVertex(id="M", label="M", dim=(1, 1), mesh_complete=False),
            ARVertex(id="Z", label="Z", dim=(1,)),
        )
        tq = TranslationQuiver(
            vertices, (OneArrow("T", "M"), OneArrow("M", "Z")), (("Z", "T"),)
        )
        assert [f.rule for f in validate(tq).errors] == [FindingRule.DIMENSION]


class TestWarnings:
    def test_sectional_cycle_without_boundary_modules(
        self, fixtures_dir: Path
    ) -> None:
        window = load_ar_quiver(fixtures_dir / "infinite_cycle.corrupt.ar.yaml")
        report = validate(window)

        assert report.errors == []
        assert [f.rule for f in report.warnings] == [FindingRule.SECTIONAL_CYCLE]
        assert set(report.warnings[0].ids) == {"A", "B", "C"}

    def test_cycle_through_a_projective_is_allowed(
        self, load_window: Callable[[str], TranslationQuiver]
    ) -> None:
        window = load_window("perp_t")

        cycles = [sorted(c) for c in sectional_cycles(window, 8)]
        assert ["Delta2", "P1", "P2", "X"] in cycles
        assert FindingRule.SECTIONAL_CYCLE not in validate(window).rules()

    def test_loop_on_a_stable_vertex(self) -> None:
        tq = TranslationQuiver((_open("A"),), (OneArrow("A", "A"),))
        report = validate(tq)

        assert report.warnings[0].rule is FindingRule.LOOP
        assert report.warnings[0].severity is Severity.WARNING

    def test_loop_on_a_projective_is_allowed(self) -> None:
        tq = TranslationQuiver((_open("A", projective=True),), (OneArrow("A", "A"),))
        assert FindingRule.LOOP not in validate(tq).rules()
