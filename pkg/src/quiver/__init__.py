"""Quivers and translation-quiver windows: model, parsing, validation, export."""
from .components import connected_components
from .dot import export_dot
from .interchange import (
    ar_quiver_from_data,
    ar_quiver_to_data,
    dump_ar_quiver,
    load_ar_quiver,
    parse_ar_quiver,
    save_ar_quiver,
)
from .models import (
    ARVertex,
    Finding,
    FindingRule,
    OneArrow,
    Quiver,
    QuiverArrow,
    QuiverVertex,
    Relation,
    RelationTerm,
    Severity,
    TranslationQuiver,
    ValidationReport,
)
from .parser import format_quiver, parse_quiver
from .validate import is_sectional_cycle, sectional_cycles, validate

__all__ = [
    "ARVertex",
    "Finding",
    "FindingRule",
    "OneArrow",
    "Quiver",
    "QuiverArrow",
    "QuiverVertex",
    "Relation",
    "RelationTerm",
    "Severity",
    "TranslationQuiver",
    "ValidationReport",
    "parse_quiver",
    "format_quiver",
    "parse_ar_quiver",
    "dump_ar_quiver",
    "load_ar_quiver",
    "save_ar_quiver",
    "ar_quiver_from_data",
    "ar_quiver_to_data",
    "validate",
    "sectional_cycles",
    "is_sectional_cycle",
    "export_dot",
    "connected_components",
]
