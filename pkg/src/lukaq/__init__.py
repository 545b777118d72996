"""Graded database querying with many-valued logic formulas.

Rows of a numeric table are possible worlds; a query is a propositional
formula over the normalized columns; evaluation assigns every row an exact
rational truth degree in [0,1]. The package bundles a parser for the textual
query syntax, linguistic-hedge synthesis that replays crisp threshold
queries as pure formulas, a graded ranking engine, a SQL transpiler with an
exact reference evaluator, and HTTP/CLI front ends.
"""

from .dataset import (
    Column,
    ColumnSpec,
    DataTable,
    NormalizedTable,
    Schema,
    bundled_normalized,
    bundled_schema,
    bundled_spec,
    bundled_table,
    column_extrema,
    load_csv,
    normalize,
    row_to_world,
)
from .degrees import Degree, format_degree, format_exact, parse_rational
from .engine import RankedResult, ResultEntry, answer_set, evaluate_query
from .errors import (
    CellParseError,
    DuplicateId,
    EmptyColumn,
    HeaderMismatch,
    InvalidInterval,
    InvalidSpec,
    LukaqError,
    MissingSpec,
    NotDesugarable,
    ParseError,
    SourceSpan,
    UnboundVariable,
    UnknownColumn,
    UnknownRow,
    UnsupportedSqlConstruct,
)
from .formula import (
    And,
    Assignment,
    CmpDir,
    CrispCmp,
    Falsum,
    Formula,
    Iff,
    Impl,
    IterProd,
    IterSum,
    Neg,
    Odot,
    Ominus,
    Oplus,
    Or,
    Var,
    Verum,
    desugar,
    evaluate,
    free_vars,
)
from .hedges import (
    BasicLiteral,
    HedgeStep,
    Prod,
    Sum,
    ThresholdSpec,
    apply_literal,
    geq_formula,
    leq_formula,
    literal_degree,
    simulate_geq,
    simulate_leq,
    synthesize_threshold_literal,
)
from .parser import format_formula, parse
from .sql import ColumnBinding, reference_sql_eval, transpile_expr, transpile_select

__version__ = "0.1.0"

__all__ = [
    "And", "Assignment", "BasicLiteral", "CellParseError", "CmpDir", "Column",
    "ColumnBinding", "ColumnSpec", "CrispCmp", "DataTable", "Degree",
    "DuplicateId", "EmptyColumn", "Falsum", "Formula", "HeaderMismatch",
    "HedgeStep", "Iff", "Impl", "InvalidInterval", "InvalidSpec", "IterProd",
    "IterSum", "LukaqError", "MissingSpec", "Neg", "NormalizedTable",
    "NotDesugarable", "Odot", "Ominus", "Oplus", "Or", "ParseError", "Prod",
    "RankedResult", "ResultEntry", "Schema", "SourceSpan", "Sum",
    "ThresholdSpec", "UnboundVariable", "UnknownColumn", "UnknownRow",
    "UnsupportedSqlConstruct", "Var", "Verum",
    "answer_set", "apply_literal", "bundled_normalized", "bundled_schema",
    "bundled_spec", "bundled_table", "column_extrema", "desugar", "evaluate",
    "evaluate_query", "format_degree", "format_exact", "format_formula",
    "free_vars", "geq_formula", "leq_formula", "literal_degree", "load_csv",
    "normalize", "parse", "parse_rational", "reference_sql_eval",
    "row_to_world", "simulate_geq", "simulate_leq",
    "synthesize_threshold_literal", "transpile_expr", "transpile_select",
]
