/** Tokenizer for the query grammar, shared by the mirror parser and the
 * glyph renderer. Mirrors the service's lexical rules exactly: keywords are
 * case-insensitive, whitespace is insignificant, numerals are digits with an
 * optional fraction part.
 */

export type TokenKind =
  | "NUMBER"
  | "IDENT"
  | "AND"
  | "OR"
  | "OX"
  | "ARROW"
  | "IFFOP"
  | "LE"
  | "BANG"
  | "PLUS"
  | "MINUS"
  | "STAR"
  | "CARET"
  | "SLASH"
  | "LPAREN"
  | "RPAREN"
  | "EOF";

export interface Token {
  kind: TokenKind;
  text: string;
  start: number;
  end: number;
}

export interface Span {
  start: number;
  end: number;
}

export class TokenizeError extends Error {
  constructor(message: string, public span: Span) {
    super(message);
  }
}

const KEYWORDS: Record<string, TokenKind> = { and: "AND", or: "OR", ox: "OX" };

const isDigit = (c: string) => c >= "0" && c <= "9";
const isIdentStart = (c: string) => /[A-Za-z_]/.test(c);
const isIdentPart = (c: string) => /[A-Za-z0-9_]/.test(c);

export function tokenize(text: string): Token[] {
  const tokens: Token[] = [];
  let pos = 0;
  while (pos < text.length) {
    const c = text[pos]!;
    if (/\s/.test(c)) {
      pos += 1;
      continue;
    }
    const start = pos;
    if (isDigit(c)) {
      while (pos < text.length && isDigit(text[pos]!)) pos += 1;
      if (text[pos] === "." && pos + 1 < text.length && isDigit(text[pos + 1]!)) {
        pos += 1;
        while (pos < text.length && isDigit(text[pos]!)) pos += 1;
      }
      tokens.push({ kind: "NUMBER", text: text.slice(start, pos), start, end: pos });
      continue;
    }
    if (isIdentStart(c)) {
      while (pos < text.length && isIdentPart(text[pos]!)) pos += 1;
      const word = text.slice(start, pos);
      const kind = KEYWORDS[word.toLowerCase()] ?? "IDENT";
      tokens.push({ kind, text: word, start, end: pos });
      continue;
    }
    const two = text.slice(pos, pos + 2);
    const three = text.slice(pos, pos + 3);
    if (three === "<->") {
      tokens.push({ kind: "IFFOP", text: three, start, end: pos + 3 });
      pos += 3;
      continue;
    }
    if (two === "->") {
      tokens.push({ kind: "ARROW", text: two, start, end: pos + 2 });
      pos += 2;
      continue;
    }
    if (two === "<=") {
      tokens.push({ kind: "LE", text: two, start, end: pos + 2 });
      pos += 2;
      continue;
    }
    const single: Partial<Record<string, TokenKind>> = {
      "!": "BANG",
      "+": "PLUS",
      "-": "MINUS",
      "*": "STAR",
      "^": "CARET",
      "/": "SLASH",
      "(": "LPAREN",
      ")": "RPAREN",
    };
    const kind = single[c];
    if (!kind) {
      throw new TokenizeError(`unexpected character ${JSON.stringify(c)}`, {
        start: pos,
        end: pos + 1,
      });
    }
    tokens.push({ kind, text: c, start, end: pos + 1 });
    pos += 1;
  }
  tokens.push({ kind: "EOF", text: "", start: text.length, end: text.length });
  return tokens;
}
