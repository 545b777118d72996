import { describe, expect, it } from "vitest";

import { Node, ParseError, parse, tryParse } from "../src/parser.js";

const v = (name: string): Node => ({ type: "var", name });

describe("mirror grammar", () => {
  it("parses the lattice walkthrough query", () => {
    expect(parse("X1 and (X5 or !X7)")).toEqual({
      type: "and",
      left: v("X1"),
      right: { type: "or", left: v("X5"), right: { type: "neg", arg: v("X7") } },
    });
  });

  it("parses iterated hedges in both spellings", () => {
    const starred = parse("2*(X11^2)");
    const bare = parse("2(X11^2)");
    expect(starred).toEqual(bare);
    expect(starred).toEqual({
      type: "itersum",
      count: 2,
      arg: { type: "iterprod", count: 2, arg: v("X11") },
    });
  });

  it("parses crisp comparisons on both sides", () => {
    expect(parse("(0.875<=X11)")).toEqual({
      type: "crisp", direction: "geq", threshold: "0.875", variable: "X11",
    });
    expect(parse("(X12<=0.25)")).toEqual({
      type: "crisp", direction: "leq", threshold: "0.25", variable: "X12",
    });
    expect(parse("(7/8<=X11)")).toEqual({
      type: "crisp", direction: "geq", threshold: "7/8", variable: "X11",
    });
  });

  it("applies the precedence tower", () => {
    expect(parse("X1 - X5 + X7").type).toBe("oplus");
    expect(parse("X1 + X5 and X7").type).toBe("and");
    expect(parse("X1 and X5 or X7").type).toBe("or");
    expect(parse("X1 or X5 -> X7").type).toBe("impl");
    expect(parse("X1 -> X5 <-> X7").type).toBe("iff");
    expect(parse("!X1^2")).toEqual({
      type: "neg",
      arg: { type: "iterprod", count: 2, arg: v("X1") },
    });
  });

  it("keeps implication right-associative and iff non-associative", () => {
    expect(parse("X1 -> X5 -> X7")).toEqual({
      type: "impl",
      left: v("X1"),
      right: { type: "impl", left: v("X5"), right: v("X7") },
    });
    expect(() => parse("X1 <-> X5 <-> X7")).toThrow(ParseError);
  });

  it("rejects what the service rejects, with spans", () => {
    for (const bad of ["", "X11 and", "2", "0.5", "2.5*X1", "X1^0", "(1.5<=X1)", "X1 X2"]) {
      const outcome = tryParse(bad);
      expect(outcome.ok).toBe(false);
      if (!outcome.ok) {
        expect(outcome.span.start).toBeGreaterThanOrEqual(0);
        expect(outcome.span.end).toBeLessThanOrEqual(bad.length);
      }
    }
  });

  it("reports the span of the offending token", () => {
    const outcome = tryParse("X11 and and X12");
    expect(outcome).toMatchObject({ ok: false, span: { start: 8, end: 11 } });
  });
});
