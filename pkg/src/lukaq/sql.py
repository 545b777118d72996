"""SQL translation of query formulas, and a reference evaluator for it.

Each connective maps to a fixed template over `least`, `greatest`, `ABS`
and arithmetic; subexpressions substitute textually, so output size is
linear in the formula's node count (the iterated forms translate to a
single `n*...` template, never to an n-fold expansion). The emitted dialect
needs only least/greatest/ABS/CASE, as in MySQL, PostgreSQL, MariaDB or
Oracle; the exact grammar is documented in docs/sql_output.md.

`reference_sql_eval` independently evaluates that emitted grammar in exact
rational arithmetic. It exists to differential-test the transpiler against
the formula evaluator and is deliberately not implemented in terms of it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .degrees import Degree, format_numeral
from .errors import UnboundVariable, UnknownColumn, UnsupportedSqlConstruct
from .formula import (
    And,
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
)

_SQL_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class ColumnBinding:
    """Maps query variables to SQL column names within one table."""

    table: str
    columns: Mapping[str, str]

    def __post_init__(self) -> None:
        if not _SQL_IDENT.match(self.table):
            raise ValueError(f"bad SQL table name {self.table!r}")
        for var, col in self.columns.items():
            if not _SQL_IDENT.match(col):
                raise ValueError(f"bad SQL column name {col!r} for {var}")

    def column(self, var: str) -> str:
        try:
            return self.columns[var]
        except KeyError:
            raise UnboundVariable(var) from None


def _grouped(phi: Formula, binding: ColumnBinding) -> str:
    """Subexpression text for slots where SQL precedence could regroup it.

    Only the negation ("1 - (a)") and equivalence ("1-ABS(a-b)") templates
    emit text with a top-level arithmetic operator; everything else is an
    atom, a function call, or already parenthesized. Those two get wrapped
    when substituted to the right of `-` or after `n*`, otherwise textual
    substitution would change the grouping and break exactness.
    """
    text = transpile_expr(phi, binding)
    if isinstance(phi, (Neg, Iff)):
        return f"({text})"
    return text


def transpile_expr(phi: Formula, binding: ColumnBinding) -> str:
    """Emit the SQL expression computing `phi`'s degree on each row."""
    match phi:
        case Var(name):
            return binding.column(name)
        case Falsum():
            return "0"
        case Verum():
            return "1"
        case Neg(a):
            return f"1 - ({transpile_expr(a, binding)})"
        case Impl(a, b):
            return f"least(1,1-({transpile_expr(a, binding)} - {_grouped(b, binding)}))"
        case Or(a, b):
            return f"greatest({transpile_expr(a, binding)},{transpile_expr(b, binding)})"
        case And(a, b):
            return f"least({transpile_expr(a, binding)},{transpile_expr(b, binding)})"
        case Iff(a, b):
            return f"1-ABS({transpile_expr(a, binding)}-{_grouped(b, binding)})"
        case Oplus(a, b):
            return f"least(1,{transpile_expr(a, binding)}+{transpile_expr(b, binding)})"
        case Odot(a, b):
            return f"greatest(0,{transpile_expr(a, binding)}+{transpile_expr(b, binding)}-1)"
        case Ominus(a, b):
            return f"greatest(0,{transpile_expr(a, binding)}-{_grouped(b, binding)})"
        case IterSum(n, a):
            return f"least(1,{n}*{_grouped(a, binding)})"
        case IterProd(n, a):
            return f"greatest(0,{n}*{_grouped(a, binding)}-{n}+1)"
        case CrispCmp(direction, c, name):
            op = ">=" if direction is CmpDir.GEQ else "<="
            numeral = _sql_numeral(c)
            return f"(CASE WHEN {binding.column(name)} {op} {numeral} THEN 1 ELSE 0 END)"
    raise TypeError(f"not a formula node: {phi!r}")


def _sql_numeral(value: Fraction) -> str:
    """Minimal decimal when exact, else parenthesized (p/q) arithmetic."""
    text = format_numeral(value)
    return f"({text})" if "/" in text else text


def transpile_select(
    phi: Formula,
    binding: ColumnBinding,
    projected: list[str] | None = None,
    order: bool = False,
) -> str:
    """Full SELECT statement with the degree expression aliased `Results`."""
    expr = transpile_expr(phi, binding)
    head = ", ".join([*(projected or []), f"{expr} As Results"])
    statement = f"SELECT {head} FROM {binding.table}"
    if order:
        statement += " ORDER BY Results DESC"
    return statement + ";"


# -- reference evaluation of the emitted grammar -------------------------------

_SQL_TOKEN = re.compile(
    r"""
    (?P<WS>\s+)
  | (?P<NUMBER>\d+(?:\.\d+)?)
  | (?P<NAME>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<GE>>=) | (?P<LE><=)
  | (?P<OP>[-+*/(),])
    """,
    re.VERBOSE,
)


def _sql_tokens(expr: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(expr):
        m = _SQL_TOKEN.match(expr, pos)
        if m is None:
            raise UnsupportedSqlConstruct(f"cannot tokenize at ...{expr[pos:pos + 20]!r}")
        if m.lastgroup != "WS":
            tokens.append((m.lastgroup or "", m.group()))
        pos = m.end()
    tokens.append(("EOF", ""))
    return tokens


class _SqlEval:
    """Recursive-descent evaluator for the transpiler's output grammar."""

    def __init__(self, expr: str, row: Mapping[str, Fraction]):
        self.tokens = _sql_tokens(expr)
        self.pos = 0
        self.row = row

    def peek(self) -> tuple[str, str]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        if tok[0] != "EOF":
            self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, text = self.take()
        if text != op:
            raise UnsupportedSqlConstruct(f"expected {op!r}, got {text!r}")

    def expect_word(self, word: str) -> None:
        kind, text = self.take()
        if kind != "NAME" or text.upper() != word:
            raise UnsupportedSqlConstruct(f"expected {word}, got {text!r}")

    def run(self) -> Fraction:
        value = self.sum_level()
        if self.peek()[0] != "EOF":
            raise UnsupportedSqlConstruct(f"trailing input at {self.peek()[1]!r}")
        return value

    def sum_level(self) -> Fraction:
        value = self.product_level()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.product_level()
            value = value + rhs if op == "+" else value - rhs
        return value

    def product_level(self) -> Fraction:
        value = self.unary_level()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.unary_level()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary_level(self) -> Fraction:
        if self.peek()[1] == "-":
            self.take()
            return -self.unary_level()
        return self.atom()

    def atom(self) -> Fraction:
        kind, text = self.take()
        if kind == "NUMBER":
            return Fraction(text)
        if kind == "OP" and text == "(":
            value = self.sum_level()
            self.expect_op(")")
            return value
        if kind == "NAME":
            upper = text.upper()
            if upper in ("LEAST", "GREATEST"):
                args = self.call_args()
                if len(args) < 2:
                    raise UnsupportedSqlConstruct(f"{text} needs at least two arguments")
                return min(args) if upper == "LEAST" else max(args)
            if upper == "ABS":
                args = self.call_args()
                if len(args) != 1:
                    raise UnsupportedSqlConstruct("ABS takes one argument")
                return abs(args[0])
            if upper == "CASE":
                return self.case_when()
            if self.peek()[1] == "(":
                raise UnsupportedSqlConstruct(f"unknown function {text!r}")
            try:
                return self.row[text]
            except KeyError:
                raise UnknownColumn(f"no value for column {text!r}") from None
        raise UnsupportedSqlConstruct(f"unexpected token {text!r}")

    def call_args(self) -> list[Fraction]:
        self.expect_op("(")
        args = [self.sum_level()]
        while self.peek()[1] == ",":
            self.take()
            args.append(self.sum_level())
        self.expect_op(")")
        return args

    def case_when(self) -> Fraction:
        # CASE WHEN <value> (>=|<=) <value> THEN 1 ELSE 0 END
        self.expect_word("WHEN")
        left = self.sum_level()
        kind, op = self.take()
        if kind not in ("GE", "LE"):
            raise UnsupportedSqlConstruct(f"expected a comparison, got {op!r}")
        right = self.sum_level()
        self.expect_word("THEN")
        then_value = self.sum_level()
        self.expect_word("ELSE")
        else_value = self.sum_level()
        self.expect_word("END")
        holds = left >= right if kind == "GE" else left <= right
        return then_value if holds else else_value


def reference_sql_eval(expr: str, row: Mapping[str, Fraction]) -> Degree:
    """Evaluate an emitted SQL expression exactly on one row.

    Supports exactly the grammar transpile_expr produces: least/greatest/ABS,
    +, -, *, / (for exact (p/q) numerals), decimal numerals, column names,
    CASE WHEN comparisons, and parentheses.
    """
    return _SqlEval(expr, row).run()
