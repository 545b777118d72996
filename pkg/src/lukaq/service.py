"""HTTP API over one dataset: schema inspection, normalization, querying.

The service holds an immutable normalized snapshot. PUT /normalization
re-normalizes into a fresh snapshot and swaps it in atomically; queries in
flight keep reading the snapshot they started with, and every response
carries the snapshot version it was computed against. Loading the dataset
is a startup concern (CLI flags), not an endpoint: the API is read-only
apart from normalization.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .dataset import (
    ColumnSpec,
    DataTable,
    NormalizedTable,
    column_extrema,
    normalize,
    validate_spec,
)
from .degrees import format_degree, format_exact, format_numeral
from .engine import RankedResult, evaluate_query
from .errors import (
    InvalidInterval,
    InvalidSpec,
    LukaqError,
    MissingSpec,
    ParseError,
    SourceSpan,
    UnboundVariable,
)
from .hedges import (
    BasicLiteral,
    ThresholdSpec,
    apply_literal,
    simulate_geq,
    synthesize_threshold_literal,
)
from .parser import format_formula, parse
from .sql import ColumnBinding, transpile_select


class ApiException(Exception):
    """Maps onto the machine-readable error body {code, message, span?}."""

    def __init__(self, status: int, code: str, message: str, span: SourceSpan | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.span = span

    def body(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.code == "syntax_error" and self.span is not None:
            doc["span"] = {"start": self.span.start, "end": self.span.end}
        return doc


@dataclass(frozen=True)
class Snapshot:
    version: int
    table: DataTable
    spec: Mapping[str, ColumnSpec]
    normalized: NormalizedTable


class DatasetState:
    """Holds the current snapshot; replacement is atomic under a lock."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._snapshot: Snapshot | None = None

    def load(self, table: DataTable, spec: Mapping[str, ColumnSpec]) -> Snapshot:
        with self._lock:
            snapshot = Snapshot(1, table, dict(spec), normalize(table, spec))
            self._snapshot = snapshot
            return snapshot

    def replace_spec(self, spec: Mapping[str, ColumnSpec]) -> Snapshot:
        with self._lock:
            if self._snapshot is None:
                raise ApiException(503, "internal", "no dataset loaded")
            snapshot = Snapshot(
                self._snapshot.version + 1,
                self._snapshot.table,
                dict(spec),
                normalize(self._snapshot.table, spec),
            )
            self._snapshot = snapshot
            return snapshot

    def current(self) -> Snapshot:
        snapshot = self._snapshot
        if snapshot is None:
            raise ApiException(503, "internal", "no dataset loaded")
        return snapshot


def _spec_number(value: Fraction) -> int | float:
    return int(value) if value.denominator == 1 else float(value)


def query_response(result: RankedResult, version: int) -> dict[str, Any]:
    """The /query wire document; the CLI reuses it byte for byte."""
    return {
        "entries": [
            {
                "id": entry.row_id,
                "display": dict(entry.display),
                "degree": format_degree(entry.degree),
                "degree_exact": format_exact(entry.degree),
            }
            for entry in result.entries
        ],
        "version": version,
    }


def encode_json(doc: Any) -> str:
    """Canonical JSON serialization shared by the service and the CLI."""
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _parse_formula(text: Any) -> Any:
    if not isinstance(text, str):
        raise ApiException(400, "syntax_error", "formula must be a string", SourceSpan(0, 0))
    try:
        return parse(text)
    except ParseError as exc:
        raise ApiException(400, "syntax_error", exc.message, exc.span) from exc


def _exact_body(request_body: bytes) -> dict[str, Any]:
    try:
        doc = json.loads(request_body or b"{}", parse_float=Fraction, parse_int=Fraction)
    except json.JSONDecodeError as exc:
        raise ApiException(400, "syntax_error", f"invalid JSON body: {exc}", SourceSpan(0, 0))
    if not isinstance(doc, dict):
        raise ApiException(400, "syntax_error", "body must be a JSON object", SourceSpan(0, 0))
    return doc


def create_app(state: DatasetState) -> FastAPI:
    app = FastAPI(title="lukaq", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    def json_response(doc: Any, status: int = 200) -> Response:
        return Response(encode_json(doc), status_code=status, media_type="application/json")

    @app.exception_handler(ApiException)
    async def api_exception_handler(_request: Request, exc: ApiException) -> Response:
        return json_response(exc.body(), exc.status)

    @app.exception_handler(LukaqError)
    async def lukaq_error_handler(_request: Request, exc: LukaqError) -> Response:
        return json_response({"code": "internal", "message": str(exc)}, 500)

    @app.get("/schema")
    def get_schema() -> Response:
        snapshot = state.current()
        columns = []
        for column in snapshot.table.schema.columns:
            entry: dict[str, Any] = {"name": column.name, "kind": column.kind}
            if column.variable:
                entry["variable"] = column.variable
            if column.kind == "numeric" and len(snapshot.table) > 0:
                low, high = column_extrema(snapshot.table, column.name)
                entry["min"] = format_numeral(low)
                entry["max"] = format_numeral(high)
            spec = snapshot.spec.get(column.name)
            if spec is not None:
                entry["normalization"] = {
                    "min": _spec_number(spec.minimum),
                    "max": _spec_number(spec.maximum),
                    "reversed": spec.reversed,
                }
            columns.append(entry)
        return json_response({"columns": columns, "version": snapshot.version})

    @app.put("/normalization")
    async def put_normalization(request: Request) -> Response:
        doc = _exact_body(await request.body())
        if not isinstance(doc, dict):
            raise ApiException(422, "invalid_spec", "body must be an object of column specs")
        schema = state.current().table.schema
        spec: dict[str, ColumnSpec] = {}
        try:
            for name, entry in doc.items():
                if not isinstance(entry, dict) or not {"min", "max"} <= set(entry):
                    raise InvalidSpec(f"column {name!r}: entry needs min and max")
                spec[name] = ColumnSpec(
                    Fraction(entry["min"]),
                    Fraction(entry["max"]),
                    bool(entry.get("reversed", False)),
                )
            validate_spec(spec, schema)
        except (InvalidSpec, MissingSpec, ValueError, TypeError) as exc:
            raise ApiException(422, "invalid_spec", str(exc)) from exc
        snapshot = state.replace_spec(spec)
        return json_response({"version": snapshot.version})

    @app.post("/query")
    async def post_query(request: Request) -> Response:
        doc = _exact_body(await request.body())
        snapshot = state.current()
        phi = _parse_formula(doc.get("formula"))
        limit = doc.get("limit")
        if limit is not None:
            limit = int(limit)
            if limit < 1:
                raise ApiException(422, "invalid_spec", "limit must be >= 1")
        only_positive = bool(doc.get("only_positive", False))
        try:
            result = evaluate_query(phi, snapshot.normalized, limit, only_positive)
        except UnboundVariable as exc:
            raise ApiException(422, "unbound_variable", str(exc)) from exc
        return json_response(query_response(result, snapshot.version))

    @app.post("/transpile")
    async def post_transpile(request: Request) -> Response:
        doc = _exact_body(await request.body())
        snapshot = state.current()
        phi = _parse_formula(doc.get("formula"))
        table_name = doc.get("table") or "data"
        projected = doc.get("projected") or []
        order = bool(doc.get("order", False))
        try:
            binding = ColumnBinding(str(table_name), snapshot.table.schema.variable_map)
            sql = transpile_select(phi, binding, [str(c) for c in projected], order)
        except UnboundVariable as exc:
            raise ApiException(422, "unbound_variable", str(exc)) from exc
        except ValueError as exc:
            raise ApiException(422, "invalid_spec", str(exc)) from exc
        return json_response({"sql": sql})

    @app.post("/synth-literal")
    async def post_synth_literal(request: Request) -> Response:
        doc = _exact_body(await request.body())
        try:
            if "delta" in doc:
                variable = doc.get("variable")
                if not isinstance(variable, str):
                    raise ApiException(422, "invalid_spec", "delta mode needs a variable name")
                snapshot = state.current()
                values = [
                    world[variable]
                    for world in snapshot.normalized.worlds.values()
                    if variable in world
                ]
                if not values:
                    raise ApiException(422, "unbound_variable", f"unknown variable {variable}")
                literal = simulate_geq(Fraction(doc["delta"]), values)
            else:
                variable = doc.get("variable", "X")
                literal = synthesize_threshold_literal(
                    ThresholdSpec(Fraction(doc["q1"]), Fraction(doc["q2"]))
                )
        except KeyError as exc:
            raise ApiException(422, "invalid_spec", f"missing field {exc}") from exc
        except (InvalidInterval, ValueError, TypeError) as exc:
            raise ApiException(422, "invalid_spec", str(exc)) from exc
        return json_response(_literal_doc(literal, str(variable)))

    return app


def _literal_doc(literal: BasicLiteral, variable: str) -> dict[str, Any]:
    from .formula import Var

    return {
        "literal": format_formula(apply_literal(literal, Var(variable))),
        "steps": [{"op": step.op.value, "k": step.count} for step in literal.steps],
    }
