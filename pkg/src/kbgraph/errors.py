"""Exception types shared across the package."""

from __future__ import annotations


class KbError(Exception):
    """Base class for all kbgraph errors."""


class InvalidInputError(KbError):
    """An argument fell outside its documented domain."""


class NotFoundError(KbError):
    """A concept or association id does not exist in the graph."""


class ConflictError(KbError):
    """A name is already registered with incompatible meaning."""


class UnknownAliasError(KbError):
    """An association alias was used before being registered."""


class ParseError(KbError):
    """Malformed input text. Carries the 1-based line (and column) where parsing failed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class StoreError(KbError):
    """A persisted store file is unreadable, truncated, or corrupt."""
