"""Listing, loading and installing fixture files."""
from __future__ import annotations

import logging
import shutil
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from ..core.config import Settings
from ..core.errors import PreconditionError
from ..diagrams.models import UndirectedGraph, parse_graph
from ..knitting.seeds import KnitRecipe, load_recipe
from ..quiver.interchange import load_ar_quiver
from ..quiver.models import Quiver, TranslationQuiver
from ..quiver.parser import parse_quiver

logger = logging.getLogger(__name__)

CORRUPT_MARK = ".corrupt"

Fixture = Union[Quiver, TranslationQuiver, KnitRecipe, UndirectedGraph]


class FixtureKind(Enum):
    """Fixture kinds, keyed by file suffix."""

    QUIVER = ".qv"
    AR_QUIVER = ".ar.yaml"
    RECIPE = ".recipe.yaml"
    GRAPH = ".g"


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    kind: FixtureKind
    path: Path

    @property
    def corrupt(self) -> bool:
        """Deliberately broken fixtures fail validation."""
        return self.name.endswith(CORRUPT_MARK)

    def __str__(self) -> str:
        return f"{self.name:<24} {self.kind.name.lower():<10} {self.path.name}"


def _classify(path: Path) -> Optional[FixtureInfo]:
    for kind in FixtureKind:
        if path.name.endswith(kind.value):
            return FixtureInfo(path.name[: -len(kind.value)], kind, path)
    return None


def default_root(settings: Optional[Settings] = None) -> Path:
    """Corpus directory from settings, honouring ARQKIT_FIXTURES."""
    return (settings or Settings.load()).corpus_path


def list_fixtures(root: Optional[Path] = None) -> list[FixtureInfo]:
    """Every fixture under `root`, sorted by kind then name."""
    root = root if root is not None else default_root()
    if not root.is_dir():
        raise PreconditionError(f"fixture directory not found: {root}")
    found = [
        info
        for info in (_classify(p) for p in sorted(root.iterdir()) if p.is_file())
        if info is not None
    ]
    order = list(FixtureKind)
    found.sort(key=lambda f: (order.index(f.kind), f.name))
    logger.debug(f"Found {len(found)} fixtures in {root}")
    return found


def find_fixture(
    name: str, kind: Optional[FixtureKind] = None, root: Optional[Path] = None
) -> FixtureInfo:
    """Look a fixture up by name, optionally restricted to one kind.

    Raises:
        PreconditionError: No fixture, or more than one, matches.
    """
    matches = [
        f
        for f in list_fixtures(root)
        if f.name == name and (kind is None or f.kind is kind)
    ]
    if not matches:
        raise PreconditionError(f"no fixture named '{name}'")
    if len(matches) > 1:
        kinds = ", ".join(f.kind.name.lower() for f in matches)
        raise PreconditionError(f"fixture name '{name}' is ambiguous: {kinds}")
    return matches[0]


def load_fixture(info: FixtureInfo) -> Fixture:
    """Parse a fixture according to its kind."""
    logger.info(f"Loading fixture {info.path}")
    if info.kind is FixtureKind.AR_QUIVER:
        return load_ar_quiver(info.path)
    if info.kind is FixtureKind.RECIPE:
        return load_recipe(info.path)
    text = info.path.read_text(encoding="utf-8")
    if info.kind is FixtureKind.QUIVER:
        return parse_quiver(text)
    return parse_graph(text)


def install_fixtures(target: Path, root: Optional[Path] = None) -> list[Path]:
    """Copy the corpus into `target`, returning the written paths."""
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for info in list_fixtures(root):
        destination = target / info.path.name
        shutil.copy2(info.path, destination)
        written.append(destination)
    logger.info(f"Installed {len(written)} fixtures into {target}")
    return written
