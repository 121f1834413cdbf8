"""Core utilities: configuration, logging and errors."""
from .config import (
    CorpusConfig,
    DegreeConfig,
    KnittingConfig,
    MatrixConfig,
    SectionalConfig,
    Settings,
)
from .errors import (
    ArqkitError,
    InterchangeError,
    KnittingError,
    NotClosedSliceError,
    NotCorayVertexError,
    PreconditionError,
    QuiverSyntaxError,
    RelationError,
    UnknownVertexError,
    WindowTooSmallError,
)
from .logging import setup_logging

__all__ = [
    "Settings",
    "KnittingConfig",
    "MatrixConfig",
    "SectionalConfig",
    "DegreeConfig",
    "CorpusConfig",
    "setup_logging",
    "ArqkitError",
    "QuiverSyntaxError",
    "UnknownVertexError",
    "RelationError",
    "InterchangeError",
    "PreconditionError",
    "NotClosedSliceError",
    "KnittingError",
    "NotCorayVertexError",
    "WindowTooSmallError",
]
