"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class LukaqError(Exception):
    """Base class for all package errors."""


@dataclass(frozen=True)
class SourceSpan:
    """Half-open character range [start, end) into a query string."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"invalid span ({self.start}, {self.end})")


class ParseError(LukaqError):
    """Query text could not be parsed; carries the offending span."""

    def __init__(self, message: str, span: SourceSpan):
        super().__init__(message)
        self.message = message
        self.span = span


class UnboundVariable(LukaqError):
    """A formula variable has no value in the assignment / binding."""

    def __init__(self, name: str):
        super().__init__(f"unbound variable: {name}")
        self.name = name


class NotDesugarable(LukaqError):
    """The formula contains extension atoms with no core encoding."""


class InvalidInterval(LukaqError):
    """Threshold interval violates 0 <= q1 < q2 <= 1."""


class InvalidSpec(LukaqError):
    """A normalization spec is malformed (min >= max, unknown column, ...)."""


class HeaderMismatch(LukaqError):
    """CSV header does not contain exactly the schema's column names."""


class CellParseError(LukaqError):
    """A CSV cell could not be parsed for its column type."""

    def __init__(self, row: int, column: str, detail: str = ""):
        msg = f"row {row}, column {column!r}: cannot parse cell"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.row = row
        self.column = column


class DuplicateId(LukaqError):
    """Two rows carry the same id."""


class EmptyColumn(LukaqError):
    """Extrema requested for a column with no values."""


class MissingSpec(LukaqError):
    """A variable-bound column has no normalization spec."""

    def __init__(self, column: str):
        super().__init__(f"no normalization spec for column {column!r}")
        self.column = column


class UnknownRow(LukaqError):
    """Row id not present in the table."""


class UnsupportedSqlConstruct(LukaqError):
    """The reference SQL evaluator met syntax outside the emitted grammar."""


class UnknownColumn(LukaqError):
    """A SQL expression references a column missing from the row."""
