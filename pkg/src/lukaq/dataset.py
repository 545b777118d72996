"""Tabular data: schema, CSV ingestion, and clamped-linear normalization.

Raw numeric columns are parsed into exact rationals. Normalization rescales
each variable-bound column into [0,1] with user-chosen bounds (m_u, M_u):
n = (v - m_u) / (M_u - m_u), optionally reversed as 1 - n, then clamped.
Bounds outside the observed data range are allowed; clamping defines the
out-of-range semantics, so re-normalizing after a data update cannot fail.

Normalized snapshots are immutable: queries read a `NormalizedTable` that is
replaced wholesale when the spec changes, never mutated.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import IO, Iterable, Mapping

from .degrees import Degree
from .errors import (
    CellParseError,
    DuplicateId,
    EmptyColumn,
    HeaderMismatch,
    InvalidSpec,
    MissingSpec,
    UnknownRow,
)
from .formula import Assignment

NUMERIC = "numeric"
TEXT = "text"


@dataclass(frozen=True)
class Column:
    name: str
    kind: str
    variable: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in (NUMERIC, TEXT):
            raise ValueError(f"column kind must be numeric or text, got {self.kind!r}")
        if self.variable is not None and self.kind != NUMERIC:
            raise ValueError(f"only numeric columns may bind a variable ({self.name})")


@dataclass(frozen=True)
class Schema:
    columns: tuple[Column, ...]

    def __init__(self, columns: Iterable[Column]):
        object.__setattr__(self, "columns", tuple(columns))
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise ValueError("column names must be unique")
        variables = [c.variable for c in self.columns if c.variable]
        if len(set(variables)) != len(variables):
            raise ValueError("bound variable names must be unique")

    def column(self, name: str) -> Column:
        for c in self.columns:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.columns]

    @property
    def bound_columns(self) -> list[Column]:
        """Columns carrying a query variable, in schema order."""
        return [c for c in self.columns if c.variable]

    @property
    def variable_map(self) -> dict[str, str]:
        """variable name -> column name."""
        return {c.variable: c.name for c in self.columns if c.variable}

    @property
    def text_columns(self) -> list[Column]:
        return [c for c in self.columns if c.kind == TEXT]


@dataclass(frozen=True)
class ColumnSpec:
    """Per-column normalization: user bounds and orientation."""

    minimum: Fraction
    maximum: Fraction
    reversed: bool = False

    def __post_init__(self) -> None:
        if self.minimum >= self.maximum:
            raise InvalidSpec(
                f"normalization needs min < max, got [{self.minimum}, {self.maximum}]"
            )

    def degree(self, value: Fraction) -> Degree:
        n = (value - self.minimum) / (self.maximum - self.minimum)
        if self.reversed:
            n = 1 - n
        return min(Fraction(1), max(Fraction(0), n))


NormalizationSpec = Mapping[str, ColumnSpec]


@dataclass(frozen=True)
class Row:
    id: int
    cells: Mapping[str, Fraction | str]


@dataclass(frozen=True)
class DataTable:
    schema: Schema
    rows: tuple[Row, ...]
    by_id: Mapping[int, Row] = field(repr=False)

    def __init__(self, schema: Schema, rows: Iterable[Row]):
        object.__setattr__(self, "schema", schema)
        object.__setattr__(self, "rows", tuple(rows))
        index: dict[int, Row] = {}
        for row in self.rows:
            if row.id in index:
                raise DuplicateId(f"duplicate row id {row.id}")
            index[row.id] = row
        object.__setattr__(self, "by_id", index)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class NormalizedTable:
    """Immutable snapshot: one possible world per row, plus display cells."""

    schema: Schema
    worlds: Mapping[int, Assignment]
    display: Mapping[int, Mapping[str, str]]
    row_ids: tuple[int, ...]

    @property
    def variables(self) -> set[str]:
        return set(self.schema.variable_map)

    def world(self, row_id: int) -> Assignment:
        try:
            return self.worlds[row_id]
        except KeyError:
            raise UnknownRow(f"no row with id {row_id}") from None


def row_to_world(ntable: NormalizedTable, row_id: int) -> Assignment:
    """The possible world (variable assignment) of one row."""
    return ntable.world(row_id)


def load_csv(source: IO[str] | IO[bytes] | str, schema: Schema) -> DataTable:
    """Read a UTF-8, comma-separated, headered CSV into a DataTable.

    The header must contain exactly the schema's column names (any order).
    Numeric cells parse as exact rationals; an `id` column, when the schema
    has one, supplies integer row ids, otherwise ids are 1-based positions.
    """
    if isinstance(source, str):
        stream: IO[str] = io.StringIO(source)
    elif isinstance(source.read(0), bytes):  # type: ignore[union-attr]
        stream = io.TextIOWrapper(source, encoding="utf-8")  # type: ignore[arg-type]
    else:
        stream = source  # type: ignore[assignment]

    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise HeaderMismatch("empty input: no header row") from None
    header = [h.strip() for h in header]
    if sorted(header) != sorted(schema.names):
        missing = sorted(set(schema.names) - set(header))
        extra = sorted(set(header) - set(schema.names))
        raise HeaderMismatch(f"header mismatch: missing {missing}, unexpected {extra}")

    has_id = "id" in schema.names
    rows: list[Row] = []
    for position, record in enumerate(reader, start=1):
        if len(record) != len(header):
            raise CellParseError(position, "<record>", f"expected {len(header)} cells")
        cells: dict[str, Fraction | str] = {}
        for name, raw in zip(header, record):
            column = schema.column(name)
            if column.kind == NUMERIC:
                try:
                    cells[name] = Fraction(raw.strip())
                except (ValueError, ZeroDivisionError):
                    raise CellParseError(position, name, repr(raw)) from None
            else:
                cells[name] = raw
        if has_id:
            id_cell = cells["id"]
            if not isinstance(id_cell, Fraction) or id_cell.denominator != 1:
                raise CellParseError(position, "id", "row ids must be integers")
            row_id = int(id_cell)
        else:
            row_id = position
        rows.append(Row(row_id, cells))
    return DataTable(schema, rows)


def column_extrema(table: DataTable, column: str) -> tuple[Fraction, Fraction]:
    """Exact (min, max) of a numeric column; EmptyColumn on no rows."""
    col = table.schema.column(column)
    if col.kind != NUMERIC:
        raise ValueError(f"column {column!r} is not numeric")
    values = [row.cells[column] for row in table.rows]
    if not values:
        raise EmptyColumn(f"column {column!r} has no values")
    return min(values), max(values)  # type: ignore[type-var,return-value]


def normalize(table: DataTable, spec: NormalizationSpec) -> NormalizedTable:
    """Build the normalized snapshot for every variable-bound column.

    `spec` must cover each bound column; unused entries are ignored.
    """
    for column in table.schema.bound_columns:
        if column.name not in spec:
            raise MissingSpec(column.name)
    text_names = [c.name for c in table.schema.text_columns]

    worlds: dict[int, Assignment] = {}
    display: dict[int, Mapping[str, str]] = {}
    for row in table.rows:
        world = {
            column.variable: spec[column.name].degree(row.cells[column.name])
            for column in table.schema.bound_columns
        }
        worlds[row.id] = world
        display[row.id] = {name: str(row.cells[name]) for name in text_names}
    return NormalizedTable(
        schema=table.schema,
        worlds=worlds,
        display=display,
        row_ids=tuple(row.id for row in table.rows),
    )


# -- JSON formats -------------------------------------------------------------


def schema_from_json(text: str) -> Schema:
    """Schema document: {"columns": [{"name", "kind", "variable"?}, ...]}."""
    doc = json.loads(text)
    try:
        columns = [
            Column(c["name"], c["kind"], c.get("variable"))
            for c in doc["columns"]
        ]
    except (KeyError, TypeError) as exc:
        raise InvalidSpec(f"malformed schema document: {exc}") from exc
    return Schema(columns)


def schema_to_json(schema: Schema) -> str:
    doc = {
        "columns": [
            {"name": c.name, "kind": c.kind}
            | ({"variable": c.variable} if c.variable else {})
            for c in schema.columns
        ]
    }
    return json.dumps(doc, indent=2) + "\n"


def spec_from_json(text: str, schema: Schema | None = None) -> dict[str, ColumnSpec]:
    """Spec document: {column: {"min": num, "max": num, "reversed": bool}}.

    Numbers are parsed exactly (no float round-trip). With a schema, entries
    must name known numeric columns and cover every variable-bound column.
    """
    try:
        doc = json.loads(text, parse_float=Fraction, parse_int=Fraction)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidSpec("spec document must be a JSON object")
    spec: dict[str, ColumnSpec] = {}
    for name, entry in doc.items():
        if not isinstance(entry, dict) or not {"min", "max"} <= set(entry):
            raise InvalidSpec(f"column {name!r}: entry needs min and max")
        try:
            spec[name] = ColumnSpec(
                Fraction(entry["min"]),
                Fraction(entry["max"]),
                bool(entry.get("reversed", False)),
            )
        except (ValueError, TypeError) as exc:
            raise InvalidSpec(f"column {name!r}: {exc}") from exc
    if schema is not None:
        validate_spec(spec, schema)
    return spec


def validate_spec(spec: NormalizationSpec, schema: Schema) -> None:
    for name in spec:
        try:
            column = schema.column(name)
        except KeyError:
            raise InvalidSpec(f"unknown column {name!r}") from None
        if column.kind != NUMERIC:
            raise InvalidSpec(f"column {name!r} is not numeric")
    for column in schema.bound_columns:
        if column.name not in spec:
            raise MissingSpec(column.name)


def spec_to_json(spec: NormalizationSpec) -> str:
    def num(value: Fraction):
        return int(value) if value.denominator == 1 else float(value)

    doc = {
        name: {"min": num(s.minimum), "max": num(s.maximum), "reversed": s.reversed}
        for name, s in spec.items()
    }
    return json.dumps(doc, indent=2) + "\n"


# -- bundled synthetic dataset -------------------------------------------------


def _bundled_text(filename: str) -> str:
    return (resources.files("lukaq") / "data" / filename).read_text(encoding="utf-8")


def bundled_schema() -> Schema:
    return schema_from_json(_bundled_text("schema.json"))


def bundled_table() -> DataTable:
    return load_csv(_bundled_text("cars.csv"), bundled_schema())


def bundled_spec() -> dict[str, ColumnSpec]:
    return spec_from_json(_bundled_text("normalization.json"), bundled_schema())


def bundled_normalized() -> NormalizedTable:
    return normalize(bundled_table(), bundled_spec())
