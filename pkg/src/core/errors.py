"""Exception hierarchy shared by every arqkit module."""
from __future__ import annotations


class ArqkitError(Exception):
    """Base class for domain errors reported with exit status 1."""


class QuiverSyntaxError(ArqkitError):
    """Quiver source does not follow the grammar."""

    def __init__(self, message: str, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class UnknownVertexError(ArqkitError):
    """An arrow or record references an undeclared vertex."""


class RelationError(ArqkitError):
    """A relation term is not a composable chain of declared arrows."""


class InterchangeError(ArqkitError):
    """Malformed AR interchange document."""


class PreconditionError(ArqkitError):
    """An operation was called outside its precondition."""


class NotClosedSliceError(ArqkitError):
    """A translate cannot be expressed in the basis of the chosen slice."""


class KnittingError(ArqkitError):
    """Seeds or schedule are inconsistent."""


class NotCorayVertexError(ArqkitError):
    """Insertion point is not a coray (or ray) vertex."""


class WindowTooSmallError(ArqkitError):
    """The window does not contain enough structure for the requested analysis."""
