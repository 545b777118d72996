"""Command-line front end: query, transpile, synth-literal, extrema, serve.

Exit codes: 0 success, 1 I/O or startup failure, 2 query syntax error
(with a caret-pointed span on stderr), 3 unbound variable, 4 invalid
normalization spec or threshold interval. stdout carries only payload;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from .dataset import (
    DataTable,
    Schema,
    bundled_schema,
    bundled_spec,
    bundled_table,
    column_extrema,
    load_csv,
    normalize,
    schema_from_json,
    spec_from_json,
)
from .degrees import format_degree, format_numeral
from .engine import RankedResult, evaluate_query
from .errors import (
    InvalidInterval,
    InvalidSpec,
    LukaqError,
    MissingSpec,
    ParseError,
    UnboundVariable,
)
from .formula import Formula, Var
from .hedges import ThresholdSpec, apply_literal, literal_degree, simulate_geq, synthesize_threshold_literal
from .parser import format_formula, parse
from .service import DatasetState, create_app, encode_json, query_response
from .sql import ColumnBinding, transpile_select

EXIT_OK = 0
EXIT_IO = 1
EXIT_SYNTAX = 2
EXIT_UNBOUND = 3
EXIT_SPEC = 4


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_text(path: str, what: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliFailure(EXIT_IO, f"cannot read {what} {path!r}: {exc}")


def _load_inputs(args: argparse.Namespace) -> tuple[DataTable, dict, Schema]:
    """Dataset from --data/--schema/--norm, falling back to the bundle."""
    if args.schema:
        schema = schema_from_json(_read_text(args.schema, "schema"))
    else:
        schema = bundled_schema()
    if args.data:
        table = load_csv(_read_text(args.data, "dataset"), schema)
    elif args.schema:
        raise CliFailure(EXIT_IO, "--schema without --data")
    else:
        table = bundled_table()
    try:
        if args.norm:
            spec = spec_from_json(_read_text(args.norm, "normalization spec"), schema)
        else:
            spec = bundled_spec() if not args.schema else None
            if spec is None:
                raise CliFailure(EXIT_SPEC, "--norm is required for a custom schema")
    except (InvalidSpec, MissingSpec) as exc:
        raise CliFailure(EXIT_SPEC, str(exc))
    return table, spec, schema


def _parse_formula(text: str) -> Formula:
    try:
        return parse(text)
    except ParseError as exc:
        caret = " " * exc.span.start + "^" * max(1, exc.span.end - exc.span.start)
        raise CliFailure(EXIT_SYNTAX, f"syntax error: {exc.message}\n  {text}\n  {caret}")


def _print_result(result: RankedResult, version: int, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(encode_json(query_response(result, version)))
        return
    display_keys: list[str] = []
    for entry in result.entries:
        for key in entry.display:
            if key not in display_keys:
                display_keys.append(key)
    if fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["id", *display_keys, "degree"])
        for entry in result.entries:
            writer.writerow(
                [entry.row_id, *(entry.display.get(k, "") for k in display_keys),
                 format_degree(entry.degree)]
            )
        return
    # table format: paper-style bracketed degrees
    for entry in result.entries:
        label = " ".join(entry.display.get(k, "") for k in display_keys).strip()
        print(f"{entry.row_id}\t{label}\t[{format_degree(entry.degree)}]")


def cmd_query(args: argparse.Namespace) -> int:
    table, spec, _ = _load_inputs(args)
    ntable = normalize(table, spec)
    phi = _parse_formula(args.formula)
    try:
        result = evaluate_query(phi, ntable, args.limit, args.only_positive)
    except UnboundVariable as exc:
        raise CliFailure(EXIT_UNBOUND, str(exc))
    _print_result(result, 1, args.format)
    return EXIT_OK


def cmd_transpile(args: argparse.Namespace) -> int:
    if args.schema:
        schema = schema_from_json(_read_text(args.schema, "schema"))
    else:
        schema = bundled_schema()
    phi = _parse_formula(args.formula)
    try:
        binding = ColumnBinding(args.table, schema.variable_map)
        statement = transpile_select(phi, binding, args.project, args.order)
    except UnboundVariable as exc:
        raise CliFailure(EXIT_UNBOUND, str(exc))
    except ValueError as exc:
        raise CliFailure(EXIT_SPEC, str(exc))
    print(statement)
    return EXIT_OK


def cmd_synth_literal(args: argparse.Namespace) -> int:
    try:
        if args.delta is not None:
            if not args.var:
                raise CliFailure(EXIT_SPEC, "--delta requires --var")
            table, spec, schema = _load_inputs(args)
            ntable = normalize(table, spec)
            if args.var not in ntable.variables:
                raise CliFailure(EXIT_UNBOUND, f"unbound variable: {args.var}")
            values = [world[args.var] for world in ntable.worlds.values()]
            if not values:
                raise CliFailure(EXIT_SPEC, "dataset has no rows")
            literal = simulate_geq(Fraction(args.delta), values)
            q2 = Fraction(args.delta)
            below = [v for v in values if v < q2]
            q1 = max(below) if below else Fraction(0)
        else:
            if args.q1 is None or args.q2 is None:
                raise CliFailure(EXIT_SPEC, "need --q1 and --q2 (or --delta with --var)")
            q1, q2 = Fraction(args.q1), Fraction(args.q2)
            literal = synthesize_threshold_literal(ThresholdSpec(q1, q2))
    except (InvalidInterval, ValueError) as exc:
        raise CliFailure(EXIT_SPEC, str(exc))

    variable = args.var or "X"
    print(format_formula(apply_literal(literal, Var(variable))))
    print()
    print(f"{'x':>8}  g(x)")
    grid = sorted({q1, q2, *(Fraction(i, 20) for i in range(21))})
    for x in grid:
        marker = ""
        if x == q1:
            marker = "  <- q1"
        elif x == q2:
            marker = "  <- q2"
        print(f"{format_numeral(x):>8}  {format_degree(literal_degree(literal, x))}{marker}")
    return EXIT_OK


def cmd_extrema(args: argparse.Namespace) -> int:
    table, _, schema = _load_inputs(args)
    for column in schema.columns:
        if column.kind != "numeric":
            continue
        low, high = column_extrema(table, column.name)
        variable = f" ({column.variable})" if column.variable else ""
        print(f"{column.name}{variable}: min={format_numeral(low)} max={format_numeral(high)}")
    return EXIT_OK


def cmd_normalize_check(args: argparse.Namespace) -> int:
    if not args.norm:
        raise CliFailure(EXIT_SPEC, "normalize --check requires --norm")
    schema = (
        schema_from_json(_read_text(args.schema, "schema")) if args.schema else bundled_schema()
    )
    try:
        spec_from_json(_read_text(args.norm, "normalization spec"), schema)
    except (InvalidSpec, MissingSpec) as exc:
        raise CliFailure(EXIT_SPEC, str(exc))
    print("spec ok")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    table, spec, _ = _load_inputs(args)
    host, _, port_text = args.addr.rpartition(":")
    if not host or not port_text.isdigit():
        raise CliFailure(EXIT_IO, f"bad --addr {args.addr!r}, expected host:port")
    state = DatasetState()
    state.load(table, spec)
    uvicorn.run(create_app(state), host=host, port=int(port_text), log_level="warning")
    return EXIT_OK


def _add_dataset_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--data", help="dataset CSV path (default: bundled cars)")
    sub.add_argument("--schema", help="schema JSON path (default: bundled)")
    sub.add_argument("--norm", help="normalization spec JSON path (default: bundled)")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="lukaq", description=__doc__)
    subs = top.add_subparsers(dest="command", required=True)

    p = subs.add_parser("query", help="rank rows by a query formula")
    p.add_argument("formula")
    _add_dataset_flags(p)
    p.add_argument("--limit", type=int)
    p.add_argument("--only-positive", action="store_true")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.set_defaults(func=cmd_query)

    p = subs.add_parser("transpile", help="emit the SQL for a formula")
    p.add_argument("formula")
    p.add_argument("--schema", help="schema JSON path (default: bundled)")
    p.add_argument("--table", default="auto")
    p.add_argument("--project", nargs="*", default=[])
    p.add_argument("--order", action="store_true")
    p.set_defaults(func=cmd_transpile)

    p = subs.add_parser("synth-literal", help="synthesize a threshold hedge chain")
    p.add_argument("--q1")
    p.add_argument("--q2")
    p.add_argument("--delta")
    p.add_argument("--var")
    _add_dataset_flags(p)
    p.set_defaults(func=cmd_synth_literal)

    p = subs.add_parser("extrema", help="print per-column min/max")
    _add_dataset_flags(p)
    p.set_defaults(func=cmd_extrema)

    p = subs.add_parser("normalize", help="validate a normalization spec file")
    p.add_argument("--check", action="store_true", required=True)
    _add_dataset_flags(p)
    p.set_defaults(func=cmd_normalize_check)

    p = subs.add_parser("serve", help="run the HTTP service")
    p.add_argument("--addr", default="127.0.0.1:8000")
    _add_dataset_flags(p)
    p.set_defaults(func=cmd_serve)

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except LukaqError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
