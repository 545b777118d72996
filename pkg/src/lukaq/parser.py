"""Text syntax for queries: parse and canonical pretty-printing.

Connective spellings: `!` negation, `->` implication, `or`, `and`, `<->`,
`+` bounded sum, `ox` bounded product, `-` truncated difference, postfix
`^k` iterated product, prefix `k*`/`k` iterated sum (the `*` is optional in
front of a variable or parenthesis). `0` and `1` alone are the falsum/verum
constants. Crisp threshold atoms are written `(c<=X)` / `(X<=c)` where `c`
is a decimal or `p/q` numeral in [0,1].

Precedence, tightest first: `^k`; `!` and `k*`; `ox`; `-`; `+`; `and`;
`or`; `->` (right-associative); `<->` (non-associative). Keywords are
case-insensitive; whitespace never matters. The full grammar is spelled out
in docs/grammar.md.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .degrees import format_numeral
from .errors import ParseError, SourceSpan
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

_TOKEN_RE = re.compile(
    r"""
    (?P<WS>\s+)
  | (?P<NUMBER>\d+(?:\.\d+)?)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<ARROW>->)
  | (?P<IFFOP><->)
  | (?P<LE><=)
  | (?P<BANG>!)
  | (?P<PLUS>\+)
  | (?P<MINUS>-)
  | (?P<STAR>\*)
  | (?P<CARET>\^)
  | (?P<SLASH>/)
  | (?P<LPAREN>\()
  | (?P<RPAREN>\))
    """,
    re.VERBOSE,
)

_KEYWORDS = {"and": "AND", "or": "OR", "ox": "OX"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int
    end: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.start, self.end)


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", SourceSpan(pos, pos + 1)
            )
        kind = m.lastgroup or ""
        if kind != "WS":
            tok_text = m.group()
            if kind == "IDENT" and tok_text.lower() in _KEYWORDS:
                kind = _KEYWORDS[tok_text.lower()]
            tokens.append(Token(kind, tok_text, m.start(), m.end()))
        pos = m.end()
    tokens.append(Token("EOF", "", len(text), len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.span)
        return self.advance()

    def fail(self, message: str) -> ParseError:
        return ParseError(message, self.peek().span)

    # -- grammar, loosest level first ---------------------------------------

    def parse(self) -> Formula:
        if self.peek().kind == "EOF":
            raise self.fail("empty query")
        phi = self.iff_level()
        if self.peek().kind != "EOF":
            raise self.fail("unexpected trailing input")
        return phi

    def iff_level(self) -> Formula:
        left = self.impl_level()
        if self.peek().kind == "IFFOP":
            self.advance()
            right = self.impl_level()
            if self.peek().kind == "IFFOP":
                raise self.fail("'<->' is non-associative; parenthesize")
            return Iff(left, right)
        return left

    def impl_level(self) -> Formula:
        left = self.or_level()
        if self.peek().kind == "ARROW":
            self.advance()
            return Impl(left, self.impl_level())
        return left

    def or_level(self) -> Formula:
        left = self.and_level()
        while self.peek().kind == "OR":
            self.advance()
            left = Or(left, self.and_level())
        return left

    def and_level(self) -> Formula:
        left = self.oplus_level()
        while self.peek().kind == "AND":
            self.advance()
            left = And(left, self.oplus_level())
        return left

    def oplus_level(self) -> Formula:
        left = self.ominus_level()
        while self.peek().kind == "PLUS":
            self.advance()
            left = Oplus(left, self.ominus_level())
        return left

    def ominus_level(self) -> Formula:
        left = self.odot_level()
        while self.peek().kind == "MINUS":
            self.advance()
            left = Ominus(left, self.odot_level())
        return left

    def odot_level(self) -> Formula:
        left = self.unary_level()
        while self.peek().kind == "OX":
            self.advance()
            left = Odot(left, self.unary_level())
        return left

    def unary_level(self) -> Formula:
        tok = self.peek()
        if tok.kind == "BANG":
            self.advance()
            return Neg(self.unary_level())
        if tok.kind == "NUMBER":
            follower = self.peek(1).kind
            if follower == "STAR" or follower in ("IDENT", "LPAREN"):
                count = self._iteration_count(tok)
                self.advance()
                if self.peek().kind == "STAR":
                    self.advance()
                return IterSum(count, self.unary_level())
            # bare numeral: only the constants 0 and 1 denote formulas
            self.advance()
            if tok.text == "0":
                return self.postfix_tail(Falsum())
            if tok.text == "1":
                return self.postfix_tail(Verum())
            raise ParseError(
                "bare numerals other than 0 and 1 are not formulas", tok.span
            )
        return self.postfix_level()

    def _iteration_count(self, tok: Token) -> int:
        if "." in tok.text:
            raise ParseError("iteration count must be an integer", tok.span)
        count = int(tok.text)
        if count < 1:
            raise ParseError("iteration count must be at least 1", tok.span)
        return count

    def postfix_level(self) -> Formula:
        return self.postfix_tail(self.atom())

    def postfix_tail(self, phi: Formula) -> Formula:
        while self.peek().kind == "CARET":
            self.advance()
            tok = self.expect("NUMBER", "an exponent after '^'")
            phi = IterProd(self._iteration_count(tok), phi)
        return phi

    def atom(self) -> Formula:
        tok = self.peek()
        if tok.kind == "IDENT":
            self.advance()
            return Var(tok.text)
        if tok.kind == "LPAREN":
            self.advance()
            inner = self._paren_body()
            self.expect("RPAREN", "')'")
            return inner
        raise self.fail("expected a variable, constant, or '('")

    def _paren_body(self) -> Formula:
        # (c <= X) and (X <= c) are crisp atoms, anything else is grouping
        first, second = self.peek(), self.peek(1)
        if first.kind == "NUMBER" and second.kind in ("LE", "SLASH"):
            c = self._numeral()
            self.expect("LE", "'<='")
            var = self.expect("IDENT", "a variable name")
            return self._crisp(CmpDir.GEQ, c, var.text, first)
        if first.kind == "IDENT" and second.kind == "LE":
            self.advance()
            self.expect("LE", "'<='")
            start = self.peek()
            c = self._numeral()
            return self._crisp(CmpDir.LEQ, c, first.text, start)
        return self.iff_level()

    def _numeral(self) -> Fraction:
        tok = self.expect("NUMBER", "a numeral")
        value = Fraction(tok.text)
        if self.peek().kind == "SLASH":
            self.advance()
            denom_tok = self.expect("NUMBER", "a denominator")
            if "." in tok.text or "." in denom_tok.text:
                raise ParseError("fractional numerals must be integer/integer", denom_tok.span)
            if int(denom_tok.text) == 0:
                raise ParseError("zero denominator", denom_tok.span)
            value = Fraction(int(tok.text), int(denom_tok.text))
        return value

    def _crisp(self, direction: CmpDir, c: Fraction, var: str, at: Token) -> Formula:
        if not 0 <= c <= 1:
            raise ParseError("comparison threshold must lie in [0,1]", at.span)
        return CrispCmp(direction, c, var)


def parse(text: str) -> Formula:
    """Parse query text into a Formula; raises ParseError with a span."""
    return _Parser(text).parse()


# -- canonical printing ------------------------------------------------------

_PREC_IFF = 0
_PREC_IMPL = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_OPLUS = 4
_PREC_OMINUS = 5
_PREC_ODOT = 6
_PREC_PREFIX = 7
_PREC_POSTFIX = 8
_PREC_ATOM = 9


def _prec(phi: Formula) -> int:
    match phi:
        case Iff():
            return _PREC_IFF
        case Impl():
            return _PREC_IMPL
        case Or():
            return _PREC_OR
        case And():
            return _PREC_AND
        case Oplus():
            return _PREC_OPLUS
        case Ominus():
            return _PREC_OMINUS
        case Odot():
            return _PREC_ODOT
        case Neg() | IterSum():
            return _PREC_PREFIX
        case IterProd():
            return _PREC_POSTFIX
        case _:
            return _PREC_ATOM


def _emit(phi: Formula, floor: int) -> str:
    text: str
    match phi:
        case Var(name):
            text = name
        case Falsum():
            text = "0"
        case Verum():
            text = "1"
        case CrispCmp(direction, c, name):
            numeral = format_numeral(c)
            if direction is CmpDir.GEQ:
                text = f"({numeral}<={name})"
            else:
                text = f"({name}<={numeral})"
        case Neg(a):
            text = "!" + _emit(a, _PREC_PREFIX)
        case IterSum(k, a):
            text = f"{k}*" + _emit(a, _PREC_PREFIX)
        case IterProd(k, a):
            text = _emit(a, _PREC_POSTFIX) + f"^{k}"
        case Iff(a, b):
            text = f"{_emit(a, _PREC_IMPL)} <-> {_emit(b, _PREC_IMPL)}"
        case Impl(a, b):
            text = f"{_emit(a, _PREC_OR)} -> {_emit(b, _PREC_IMPL)}"
        case Or(a, b):
            text = f"{_emit(a, _PREC_OR)} or {_emit(b, _PREC_AND)}"
        case And(a, b):
            text = f"{_emit(a, _PREC_AND)} and {_emit(b, _PREC_OPLUS)}"
        case Oplus(a, b):
            text = f"{_emit(a, _PREC_OPLUS)} + {_emit(b, _PREC_OMINUS)}"
        case Ominus(a, b):
            text = f"{_emit(a, _PREC_OMINUS)} - {_emit(b, _PREC_ODOT)}"
        case Odot(a, b):
            text = f"{_emit(a, _PREC_ODOT)} ox {_emit(b, _PREC_PREFIX)}"
        case _:
            raise TypeError(f"not a formula node: {phi!r}")
    if _prec(phi) < floor:
        return f"({text})"
    return text


def format_formula(phi: Formula) -> str:
    """Canonical text; parse(format_formula(phi)) is structurally phi."""
    return _emit(phi, _PREC_IFF)
