"""Knitting from seed meshes with a schedule of projectives and glued translates."""
from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import replace
from enum import Enum
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import BaseModel, ValidationError

from ..core.errors import ArqkitError, KnittingError
from ..quiver.interchange import ar_quiver_from_data
from ..quiver.models import ARVertex, OneArrow, TranslationQuiver
from ..quiver.validate import validate
from .hereditary import DEFAULT_SLICE_CAP, KnitDirection
from .mesh import DimVector, MeshCloses, complete_mesh

logger = logging.getLogger(__name__)


class ScheduleKind(Enum):
    PROJECTIVE = "projective"
    INJECTIVE = "injective"
    TRANSLATE = "translate"


class ScheduleEntry(BaseModel):
    """One scheduled event of a knit."""

    kind: ScheduleKind
    vertex: str
    label: Optional[str] = None
    dim: list[int] = []
    neighbours: list[str] = []
    of: Optional[str] = None


class KnitRecipe(BaseModel):
    """Seeds, closed vertices and schedule for knit_from_seeds."""

    name: str = ""
    direction: KnitDirection = KnitDirection.RIGHT
    seeds: dict[str, Any]
    closed: list[str] = []
    schedule: list[ScheduleEntry] = []
    cap: int = DEFAULT_SLICE_CAP


def recipe_from_data(data: Any) -> KnitRecipe:
    if not isinstance(data, dict):
        raise KnittingError("knitting recipe must be a mapping")
    try:
        return KnitRecipe(**data)
    except ValidationError as e:
        raise KnittingError(f"malformed knitting recipe: {e}") from e


def load_recipe(path: Path) -> KnitRecipe:
    """Load a knitting recipe from YAML."""
    logger.info(f"Loading knitting recipe from {path}")
    with open(path, encoding="utf-8") as f:
        return recipe_from_data(yaml.safe_load(f))


class _Knit:
    """Rightward closure of the meshes a seed window determines."""

    def __init__(
        self,
        seeds: TranslationQuiver,
        closed: set[str],
        schedule: list[ScheduleEntry],
        cap: int,
        fresh: Callable[[str], str],
    ) -> None:
        self.cap = cap
        self.fresh = fresh
        self.vertices: dict[str, ARVertex] = {}
        for v in sorted(seeds.vertices, key=lambda v: v.id):
            if v.dim is None:
                raise KnittingError(f"seed vertex {v.id} has no dimension vector")
            self.vertices[v.id] = v
        self.arrows: dict[tuple[str, str], int] = {
            (a.source, a.target): a.valuation for a in seeds.arrows
        }
        self.tau: dict[str, str] = dict(seeds.translation)
        self.resolved: dict[str, bool] = {t: True for t in self.tau.values()}
        for v in self.vertices.values():
            if v.ext_injective and v.id not in self.resolved:
                self.resolved[v.id] = False
        self.closed = set(closed) | {
            v.id
            for v in self.vertices.values()
            if v.projective or (v.id in self.tau and v.mesh_complete)
        }
        self.projectives = [
            e for e in schedule if e.kind is ScheduleKind.PROJECTIVE
        ]
        self.names: dict[str, str] = {
            e.of: e.vertex
            for e in schedule
            if e.kind is ScheduleKind.TRANSLATE and e.of is not None
        }
        self.step = 0

    def preds(self, x: str) -> list[str]:
        return sorted(s for (s, t) in self.arrows if t == x)

    def succs(self, x: str) -> dict[str, int]:
        return {t: a for (s, t), a in sorted(self.arrows.items()) if s == x}

    def dim(self, x: str) -> DimVector:
        d = self.vertices[x].dim
        assert d is not None
        return d

    def _insert_projectives(self) -> None:
        for entry in list(self.projectives):
            if not all(n in self.vertices for n in entry.neighbours):
                continue
            self.projectives.remove(entry)
            if entry.vertex in self.vertices:
                raise KnittingError(f"projective {entry.vertex} is already placed")
            self.vertices[entry.vertex] = ARVertex(
                id=entry.vertex,
                label=entry.label or entry.vertex,
                dim=tuple(entry.dim),
                projective=True,
            )
            for n in entry.neighbours:
                self.arrows[(n, entry.vertex)] = 1
            self.closed.add(entry.vertex)
            logger.debug(f"Inserted projective {entry.vertex}")

    def _ready(self, x: str) -> bool:
        if x in self.resolved or x not in self.closed:
            return False
        if any(x in e.neighbours for e in self.projectives):
            return False
        return all(p in self.resolved for p in self.preds(x))

    def _place(self, x: str, dim: DimVector, succs: dict[str, int]) -> None:
        z = self.names.get(x) or self.fresh(x)
        if z in self.vertices:
            existing = self.vertices[z]
            if existing.dim != dim:
                raise KnittingError(
                    f"glued translate {z} of {x} has dimension vector "
                    f"{existing.dim}, the mesh gives {dim}"
                )
            if z in self.tau:
                raise KnittingError(f"{z} is already translated to {self.tau[z]}")
            self.vertices[z] = replace(existing, mesh_complete=True)
        else:
            self.vertices[z] = ARVertex(id=z, label=z, dim=dim)
        for y, a in succs.items():
            if self.arrows.setdefault((y, z), a) != a:
                raise KnittingError(f"arrow {y}->{z} gets two valuations")
        for p in self.preds(z):
            if p not in succs:
                raise KnittingError(
                    f"glued translate {z} has a predecessor {p} outside the mesh"
                )
        self.tau[z] = x
        self.closed.add(z)
        self.resolved[x] = True

    def run(self) -> bool:
        """Knit until nothing changes or the cap is hit; True when truncated."""
        self._insert_projectives()
        while self.step + 1 < self.cap:
            self.step += 1
            ready = [x for x in sorted(self.vertices) if self._ready(x)]
            if not ready:
                return False
            for x in ready:
                succs = self.succs(x)
                try:
                    dim = complete_mesh(
                        self.dim(x), [(self.dim(y), a) for y, a in succs.items()]
                    )
                except MeshCloses:
                    self.resolved[x] = False
                    self.vertices[x] = replace(self.vertices[x], ext_injective=True)
                    continue
                self._place(x, dim, succs)
                self._insert_projectives()
        return any(self._ready(x) for x in self.vertices) or bool(self.projectives)

    def window(self, name: str, truncated: bool) -> TranslationQuiver:
        return TranslationQuiver(
            tuple(self.vertices.values()),
            tuple(OneArrow(s, t, a) for (s, t), a in self.arrows.items()),
            tuple(self.tau.items()),
            name=name,
            metadata={"truncated": True} if truncated else {},
        ).canonical()


def _check_references(seeds: TranslationQuiver, schedule: list[ScheduleEntry]) -> None:
    known = set(seeds.ids) | {e.vertex for e in schedule}
    for e in schedule:
        refs = list(e.neighbours) + ([e.of] if e.of is not None else [])
        for ref in refs:
            if ref not in known:
                raise KnittingError(
                    f"schedule entry for {e.vertex} references unknown vertex {ref}"
                )
        if e.kind is ScheduleKind.TRANSLATE and e.of is None:
            raise KnittingError(f"translate entry {e.vertex} needs 'of'")
        if e.kind is not ScheduleKind.TRANSLATE and not e.dim:
            raise KnittingError(f"{e.kind.value} entry {e.vertex} needs 'dim'")


def _check_seeds(seeds: TranslationQuiver) -> None:
    report = validate(seeds)
    if report.errors:
        raise KnittingError(f"inconsistent seeds: {report.errors[0]}")


def knit_from_seeds(recipe: KnitRecipe) -> TranslationQuiver:
    """Close every mesh the seeds and schedule determine.

    Rightward recipes compute tau^-1 of each vertex whose predecessors are
    all settled; a vertex whose mesh arithmetic goes negative becomes
    Ext-injective. Leftward recipes are knitted on the opposite quiver.

    Raises:
        KnittingError: Inconsistent seeds, unknown references or a glued
            translate that contradicts the mesh.
    """
    try:
        seeds = ar_quiver_from_data(recipe.seeds)
    except ArqkitError as e:
        raise KnittingError(f"bad seed fragment: {e}") from e
    _check_seeds(seeds)
    _check_references(seeds, recipe.schedule)
    left = recipe.direction is KnitDirection.LEFT
    schedule = list(recipe.schedule)
    if left:
        seeds = seeds.opposite()
        flipped = {
            ScheduleKind.PROJECTIVE: ScheduleKind.INJECTIVE,
            ScheduleKind.INJECTIVE: ScheduleKind.PROJECTIVE,
            ScheduleKind.TRANSLATE: ScheduleKind.TRANSLATE,
        }
        schedule = [e.model_copy(update={"kind": flipped[e.kind]}) for e in schedule]
    fresh = (lambda x: f"tau({x})") if left else (lambda x: f"tau^-1({x})")
    knit = _Knit(seeds, set(recipe.closed), schedule, recipe.cap, fresh)
    truncated = knit.run()
    window = knit.window(recipe.name, truncated)
    if left:
        window = replace(window.opposite(), name=recipe.name)
    if truncated:
        logger.warning(f"Knit '{recipe.name}' stopped at the cap {recipe.cap}")
    logger.info(f"Knitted '{recipe.name}' from seeds: {len(window)} vertices")
    return window
