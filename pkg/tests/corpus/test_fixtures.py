"""Tests for the fixture corpus helpers."""
from __future__ import annotations

from pathlib import Path

import pytest

from src.core import PreconditionError, Settings
from src.corpus import (
    FixtureInfo,
    FixtureKind,
    default_root,
    find_fixture,
    install_fixtures,
    list_fixtures,
    load_fixture,
)
from src.diagrams import UndirectedGraph
from src.knitting import KnitRecipe
from src.quiver import Quiver, TranslationQuiver


class TestListFixtures:
    def test_sorted_by_kind_then_name(self, fixtures_dir: Path) -> None:
        found = list_fixtures(fixtures_dir)

        assert len(found) == 17
        assert [f.name for f in found[:3]] == ["a3", "d5", "kronecker"]
        assert found[3].name == "a3"
        assert found[3].kind is FixtureKind.AR_QUIVER
        assert [f.kind for f in found[-2:]] == [FixtureKind.RECIPE, FixtureKind.GRAPH]

    def test_corrupt_flag(self, fixtures_dir: Path) -> None:
        corrupt = sorted(f.name for f in list_fixtures(fixtures_dir) if f.corrupt)
        assert corrupt == [
            "a3.corrupt",
            "infinite_cycle.corrupt",
            "standard.corrupt",
            "twisted.corrupt",
        ]

    def test_unknown_suffixes_are_skipped(self, tmp_path: Path) -> None:
        (tmp_path / "notes.txt").write_text("x", encoding="utf-8")
        (tmp_path / "k.qv").write_text("vertices 1 2\n", encoding="utf-8")
        assert [f.name for f in list_fixtures(tmp_path)] == ["k"]

    def test_missing_directory(self, tmp_path: Path) -> None:
        with pytest.raises(PreconditionError, match="not found"):
            list_fixtures(tmp_path / "absent")

    def test_str(self, fixtures_dir: Path) -> None:
        info = FixtureInfo("d5", FixtureKind.QUIVER, fixtures_dir / "d5.qv")
        assert str(info).split() == ["d5", "quiver", "d5.qv"]


class TestFindFixture:
    def test_ambiguous_name(self, fixtures_dir: Path) -> None:
        with pytest.raises(PreconditionError, match="ambiguous"):
            find_fixture("a3", root=fixtures_dir)

    def test_kind_disambiguates(self, fixtures_dir: Path) -> None:
        info = find_fixture("a3", FixtureKind.QUIVER, fixtures_dir)
        assert info.path.name == "a3.qv"

    def test_unknown(self, fixtures_dir: Path) -> None:
        with pytest.raises(PreconditionError, match="no fixture named"):
            find_fixture("e9", root=fixtures_dir)


class TestLoadFixture:
    @pytest.mark.parametrize(
        "name,kind,expected",
        [
            ("kronecker", FixtureKind.QUIVER, Quiver),
            ("a3", FixtureKind.AR_QUIVER, TranslationQuiver),
            ("standard", FixtureKind.RECIPE, KnitRecipe),
            ("cycle4", FixtureKind.GRAPH, UndirectedGraph),
        ],
    )
    def test_kinds(
        self, fixtures_dir: Path, name: str, kind: FixtureKind, expected: type
    ) -> None:
        loaded = load_fixture(find_fixture(name, kind, fixtures_dir))
        assert isinstance(loaded, expected)


class TestInstallAndRoot:
    def test_install_copies_everything(
        self, fixtures_dir: Path, tmp_path: Path
    ) -> None:
        written = install_fixtures(tmp_path / "corpus", fixtures_dir)

        assert len(written) == 17
        assert (tmp_path / "corpus" / "standard.recipe.yaml").is_file()
        assert len(list_fixtures(tmp_path / "corpus")) == 17

    def test_default_root_honours_environment(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("ARQKIT_FIXTURES", str(tmp_path))
        assert default_root(Settings()) == tmp_path
        assert list_fixtures() == []
