/** Display-side mirror of the query grammar.
 *
 * Used only to drive live pretty-rendering and early syntax feedback; the
 * service remains the single evaluator. The precedence tower matches the
 * backend exactly: ^k, then !/k*, then ox, -, +, and, or, -> (right),
 * <-> (non-associative, loosest).
 */

import { Span, Token, TokenizeError, tokenize } from "./tokens.js";

export type Node =
  | { type: "var"; name: string }
  | { type: "falsum" }
  | { type: "verum" }
  | { type: "neg"; arg: Node }
  | { type: "impl"; left: Node; right: Node }
  | { type: "or"; left: Node; right: Node }
  | { type: "and"; left: Node; right: Node }
  | { type: "iff"; left: Node; right: Node }
  | { type: "oplus"; left: Node; right: Node }
  | { type: "odot"; left: Node; right: Node }
  | { type: "ominus"; left: Node; right: Node }
  | { type: "itersum"; count: number; arg: Node }
  | { type: "iterprod"; count: number; arg: Node }
  | { type: "crisp"; direction: "geq" | "leq"; threshold: string; variable: string };

export class ParseError extends Error {
  constructor(message: string, public span: Span) {
    super(message);
  }
}

class Parser {
  private pos = 0;

  constructor(private tokens: Token[]) {}

  private peek(ahead = 0): Token {
    return this.tokens[Math.min(this.pos + ahead, this.tokens.length - 1)]!;
  }

  private advance(): Token {
    const tok = this.tokens[this.pos]!;
    if (tok.kind !== "EOF") this.pos += 1;
    return tok;
  }

  private expect(kind: Token["kind"], what: string): Token {
    const tok = this.peek();
    if (tok.kind !== kind) throw new ParseError(`expected ${what}`, tok);
    return this.advance();
  }

  parse(): Node {
    if (this.peek().kind === "EOF") {
      throw new ParseError("empty query", this.peek());
    }
    const node = this.iffLevel();
    if (this.peek().kind !== "EOF") {
      throw new ParseError("unexpected trailing input", this.peek());
    }
    return node;
  }

  private iffLevel(): Node {
    const left = this.implLevel();
    if (this.peek().kind === "IFFOP") {
      this.advance();
      const right = this.implLevel();
      if (this.peek().kind === "IFFOP") {
        throw new ParseError("'<->' is non-associative; parenthesize", this.peek());
      }
      return { type: "iff", left, right };
    }
    return left;
  }

  private implLevel(): Node {
    const left = this.orLevel();
    if (this.peek().kind === "ARROW") {
      this.advance();
      return { type: "impl", left, right: this.implLevel() };
    }
    return left;
  }

  private orLevel(): Node {
    let left = this.andLevel();
    while (this.peek().kind === "OR") {
      this.advance();
      left = { type: "or", left, right: this.andLevel() };
    }
    return left;
  }

  private andLevel(): Node {
    let left = this.oplusLevel();
    while (this.peek().kind === "AND") {
      this.advance();
      left = { type: "and", left, right: this.oplusLevel() };
    }
    return left;
  }

  private oplusLevel(): Node {
    let left = this.ominusLevel();
    while (this.peek().kind === "PLUS") {
      this.advance();
      left = { type: "oplus", left, right: this.ominusLevel() };
    }
    return left;
  }

  private ominusLevel(): Node {
    let left = this.odotLevel();
    while (this.peek().kind === "MINUS") {
      this.advance();
      left = { type: "ominus", left, right: this.odotLevel() };
    }
    return left;
  }

  private odotLevel(): Node {
    let left = this.unaryLevel();
    while (this.peek().kind === "OX") {
      this.advance();
      left = { type: "odot", left, right: this.unaryLevel() };
    }
    return left;
  }

  private unaryLevel(): Node {
    const tok = this.peek();
    if (tok.kind === "BANG") {
      this.advance();
      return { type: "neg", arg: this.unaryLevel() };
    }
    if (tok.kind === "NUMBER") {
      const follower = this.peek(1).kind;
      if (follower === "STAR" || follower === "IDENT" || follower === "LPAREN") {
        const count = this.iterationCount(tok);
        this.advance();
        if (this.peek().kind === "STAR") this.advance();
        return { type: "itersum", count, arg: this.unaryLevel() };
      }
      this.advance();
      if (tok.text === "0") return this.postfixTail({ type: "falsum" });
      if (tok.text === "1") return this.postfixTail({ type: "verum" });
      throw new ParseError("bare numerals other than 0 and 1 are not formulas", tok);
    }
    return this.postfixTail(this.atom());
  }

  private iterationCount(tok: Token): number {
    if (tok.text.includes(".")) {
      throw new ParseError("iteration count must be an integer", tok);
    }
    const count = Number(tok.text);
    if (count < 1) throw new ParseError("iteration count must be at least 1", tok);
    return count;
  }

  private postfixTail(node: Node): Node {
    let out = node;
    while (this.peek().kind === "CARET") {
      this.advance();
      const tok = this.expect("NUMBER", "an exponent after '^'");
      out = { type: "iterprod", count: this.iterationCount(tok), arg: out };
    }
    return out;
  }

  private atom(): Node {
    const tok = this.peek();
    if (tok.kind === "IDENT") {
      this.advance();
      return { type: "var", name: tok.text };
    }
    if (tok.kind === "LPAREN") {
      this.advance();
      const inner = this.parenBody();
      this.expect("RPAREN", "')'");
      return inner;
    }
    throw new ParseError("expected a variable, constant, or '('", tok);
  }

  private parenBody(): Node {
    const first = this.peek();
    const second = this.peek(1);
    if (first.kind === "NUMBER" && (second.kind === "LE" || second.kind === "SLASH")) {
      const threshold = this.numeral();
      this.expect("LE", "'<='");
      const variable = this.expect("IDENT", "a variable name");
      return { type: "crisp", direction: "geq", threshold, variable: variable.text };
    }
    if (first.kind === "IDENT" && second.kind === "LE") {
      this.advance();
      this.advance();
      const threshold = this.numeral();
      return { type: "crisp", direction: "leq", threshold, variable: first.text };
    }
    return this.iffLevel();
  }

  private numeral(): string {
    const tok = this.expect("NUMBER", "a numeral");
    let text = tok.text;
    let value = Number(tok.text);
    if (this.peek().kind === "SLASH") {
      this.advance();
      const denom = this.expect("NUMBER", "a denominator");
      if (tok.text.includes(".") || denom.text.includes(".")) {
        throw new ParseError("fractional numerals must be integer/integer", denom);
      }
      if (Number(denom.text) === 0) {
        throw new ParseError("zero denominator", denom);
      }
      text = `${tok.text}/${denom.text}`;
      value = Number(tok.text) / Number(denom.text);
    }
    if (value < 0 || value > 1) {
      throw new ParseError("comparison threshold must lie in [0,1]", tok);
    }
    return text;
  }
}

/** Parse query text; throws ParseError (or TokenizeError) with a span. */
export function parse(text: string): Node {
  return new Parser(tokenize(text)).parse();
}

export type ParseOutcome =
  | { ok: true; node: Node }
  | { ok: false; message: string; span: Span };

/** Non-throwing wrapper used by the live renderer. */
export function tryParse(text: string): ParseOutcome {
  try {
    return { ok: true, node: parse(text) };
  } catch (error) {
    if (error instanceof ParseError || error instanceof TokenizeError) {
      return { ok: false, message: error.message, span: error.span };
    }
    throw error;
  }
}
