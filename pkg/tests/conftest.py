"""Shared fixtures: paths into the shipped corpus and window loaders."""
from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import pytest

from src.quiver import Quiver, TranslationQuiver, load_ar_quiver, parse_quiver

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

AR_FIXTURES = [
    "a3",
    "twisted",
    "standard",
    "f_delta",
    "perp_t",
    "perp_t_prime",
    "helical",
    "window41",
]
CORRUPT_FIXTURES = ["a3", "twisted", "standard"]


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def load_window() -> Callable[[str], TranslationQuiver]:
    def load(name: str) -> TranslationQuiver:
        return load_ar_quiver(FIXTURES / f"{name}.ar.yaml")

    return load


@pytest.fixture
def load_quiver() -> Callable[[str], Quiver]:
    def load(name: str) -> Quiver:
        return parse_quiver((FIXTURES / f"{name}.qv").read_text(encoding="utf-8"))

    return load


@pytest.fixture
def a3_window() -> TranslationQuiver:
    return load_ar_quiver(FIXTURES / "a3.ar.yaml")
