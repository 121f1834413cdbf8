"""YAML interchange format for translation-quiver windows."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated, Any, Optional, Union

import yaml
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    StrictBool,
    StrictInt,
    StrictStr,
    ValidationError,
)

from ..core.errors import InterchangeError
from .models import ARVertex, OneArrow, TranslationQuiver

logger = logging.getLogger(__name__)

Count = Annotated[StrictInt, Field(ge=0)]


class VertexRecord(BaseModel):
    """Vertex fields after the id; flags must be real booleans."""

    model_config = ConfigDict(extra="ignore")

    label: Optional[Union[StrictStr, StrictInt]] = None
    dim: Optional[list[Count]] = None
    length: Optional[Count] = None
    projective: StrictBool = False
    ext_injective: StrictBool = False
    mesh_complete: StrictBool = True


def _require(record: Any, key: str, where: str) -> Any:
    if not isinstance(record, dict) or key not in record:
        raise InterchangeError(f"{where}: missing field '{key}'")
    return record[key]


def _as_id(value: Any, where: str) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InterchangeError(f"{where}: ids must be strings, got {value!r}")
    return str(value)


def _vertex_from_record(record: Any, position: int) -> ARVertex:
    where = f"vertex #{position}"
    vid = _as_id(_require(record, "id", where), where)
    try:
        fields = VertexRecord.model_validate(record)
    except ValidationError as e:
        first = e.errors()[0]
        name = first["loc"][0] if first["loc"] else "record"
        raise InterchangeError(f"vertex '{vid}': {name}: {first['msg']}") from e
    return ARVertex(
        id=vid,
        label=vid if fields.label is None else str(fields.label),
        dim=None if fields.dim is None else tuple(fields.dim),
        length=fields.length,
        projective=fields.projective,
        ext_injective=fields.ext_injective,
        mesh_complete=fields.mesh_complete,
    )


def ar_quiver_from_data(data: Any) -> TranslationQuiver:
    """Build a window from an already-decoded interchange mapping."""
    if data is None:
        return TranslationQuiver()
    if not isinstance(data, dict):
        raise InterchangeError("interchange document must be a mapping")
    vertex_records = data.get("vertices") or []
    arrow_records = data.get("arrows") or []
    tau_records = data.get("translation") or []
    for key, value in (
        ("vertices", vertex_records),
        ("arrows", arrow_records),
        ("translation", tau_records),
    ):
        if not isinstance(value, list):
            raise InterchangeError(f"'{key}' must be a list")

    vertices = [_vertex_from_record(r, i) for i, r in enumerate(vertex_records)]
    arrows = []
    for i, record in enumerate(arrow_records):
        where = f"arrow #{i}"
        valuation = record.get("valuation", 1) if isinstance(record, dict) else 1
        if not isinstance(valuation, int) or isinstance(valuation, bool):
            raise InterchangeError(f"{where}: valuation must be an integer")
        arrows.append(
            OneArrow(
                _as_id(_require(record, "source", where), where),
                _as_id(_require(record, "target", where), where),
                valuation,
            )
        )
    pairs = []
    for i, record in enumerate(tau_records):
        where = f"translation #{i}"
        pairs.append(
            (
                _as_id(_require(record, "vertex", where), where),
                _as_id(_require(record, "tau", where), where),
            )
        )
    metadata = data.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise InterchangeError("'metadata' must be a mapping")
    tq = TranslationQuiver(
        tuple(vertices),
        tuple(arrows),
        tuple(pairs),
        name=str(data.get("name", "")),
        metadata=metadata,
    )
    return tq.canonical()


def parse_ar_quiver(text: str) -> TranslationQuiver:
    """Load a window from interchange text.

    Only structural errors are raised here; invariants are left to validate.
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise InterchangeError(f"malformed document: {e}") from e
    tq = ar_quiver_from_data(data)
    logger.debug(
        f"Loaded AR window '{tq.name}': {len(tq.vertices)} vertices, "
        f"{len(tq.arrows)} arrows, {len(tq.translation)} tau pairs"
    )
    return tq


def ar_quiver_to_data(tq: TranslationQuiver) -> dict[str, Any]:
    canonical = tq.canonical()
    data: dict[str, Any] = {"name": canonical.name}
    data["vertices"] = [
        {
            "id": v.id,
            "label": v.label,
            "dim": list(v.dim) if v.dim is not None else None,
            "length": v.length,
            "projective": v.projective,
            "ext_injective": v.ext_injective,
            "mesh_complete": v.mesh_complete,
        }
        for v in canonical.vertices
    ]
    data["arrows"] = [
        {"source": a.source, "target": a.target, "valuation": a.valuation}
        for a in canonical.arrows
    ]
    data["translation"] = [{"vertex": z, "tau": t} for z, t in canonical.translation]
    if canonical.metadata:
        data["metadata"] = dict(canonical.metadata)
    return data


def dump_ar_quiver(tq: TranslationQuiver) -> str:
    """Serialize a window; output is deterministic for equal inputs."""
    return yaml.safe_dump(
        ar_quiver_to_data(tq),
        sort_keys=False,
        allow_unicode=True,
        default_flow_style=None,
    )


def load_ar_quiver(path: Path) -> TranslationQuiver:
    with open(path, encoding="utf-8") as f:
        return parse_ar_quiver(f.read())


def save_ar_quiver(tq: TranslationQuiver, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_ar_quiver(tq))
    logger.info(f"Wrote AR window '{tq.name}' to {path}")
