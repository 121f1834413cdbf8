"""Tests for settings loading and logging setup."""
from __future__ import annotations

import logging
from collections.abc import Iterator
from pathlib import Path

import pytest

from src.core import Settings, setup_logging


class TestSettings:
    def test_defaults(self) -> None:
        settings = Settings()

        assert settings.knitting.slice_cap == 64
        assert settings.sectional.path_cap == 12
        assert settings.degrees.cycle_cap == 8
        assert settings.corpus_path == Path("fixtures")

    def test_from_yaml(self, tmp_path: Path) -> None:
        config = tmp_path / "settings.yaml"
        config.write_text(
            "knitting:\n  slice_cap: 5\nmatrices:\n  k_max: 7\n", encoding="utf-8"
        )
        settings = Settings.from_yaml(config)

        assert settings.knitting.slice_cap == 5
        assert settings.matrices.k_max == 7
        assert settings.matrices.defect_cap == 60

    def test_empty_yaml_gives_defaults(self, tmp_path: Path) -> None:
        config = tmp_path / "settings.yaml"
        config.write_text("", encoding="utf-8")
        assert Settings.from_yaml(config).random.seed == 20240101

    def test_missing_file_warns(
        self, tmp_path: Path, caplog: pytest.LogCaptureFixture
    ) -> None:
        with caplog.at_level(logging.WARNING):
            settings = Settings.load(tmp_path / "absent.yaml")

        assert settings.logging.level == "WARNING"
        assert "Config file not found" in caplog.text

    def test_fixtures_environment_override(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("ARQKIT_FIXTURES", str(tmp_path))
        assert Settings().corpus_path == tmp_path

    def test_shipped_settings(self) -> None:
        shipped = Path(__file__).resolve().parents[2] / "config" / "settings.yaml"
        settings = Settings.load(shipped)
        assert settings.corpus.path == Path("fixtures")


class TestSetupLogging:
    @pytest.fixture(autouse=True)
    def restore_root(self) -> Iterator[None]:
        root = logging.getLogger()
        level, handlers = root.level, list(root.handlers)
        yield
        root.handlers[:] = handlers
        root.setLevel(level)

    @pytest.mark.parametrize(
        "name,level", [("debug", logging.DEBUG), ("ERROR", logging.ERROR)]
    )
    def test_level(self, name: str, level: int) -> None:
        setup_logging(name)
        assert logging.getLogger().level == level

    def test_records_go_to_stderr(self, capsys: pytest.CaptureFixture[str]) -> None:
        setup_logging("INFO")
        logging.getLogger("src.test").info("knitted")

        captured = capsys.readouterr()
        assert captured.out == ""
        assert "knitted" in captured.err
