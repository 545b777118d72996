import { describe, expect, it } from "vitest";

import {
  applyError,
  applyResults,
  beginRequest,
  initialState,
  relaxText,
  splitSpan,
  visibleError,
  visibleResults,
  withText,
} from "../src/state.js";

const entry = (id: number, degree: string) => ({
  id,
  display: { model: `car ${id}` },
  degree,
  degree_exact: degree === "1.000" ? "1" : "x",
});

describe("query state", () => {
  it("shows results only for the text that produced them", () => {
    let state = withText(initialState(), "X11", true);
    const { state: sent, ticket } = beginRequest(state);
    state = applyResults(sent, ticket, "X11", [entry(3, "0.950")], 1);
    expect(visibleResults(state)?.entries).toHaveLength(1);

    state = withText(state, "X11 and X12", true);
    expect(visibleResults(state)).toBeNull();

    state = withText(state, "X11", true);
    expect(visibleResults(state)?.version).toBe(1);
  });

  it("discards responses of superseded requests", () => {
    let state = withText(initialState(), "X11", true);
    const first = beginRequest(state);
    const second = beginRequest(first.state);
    state = second.state;
    // the older request lands after the newer one was issued
    state = applyResults(state, first.ticket, "X11", [entry(1, "0.100")], 1);
    expect(visibleResults(state)).toBeNull();
    state = applyResults(state, second.ticket, "X11", [entry(2, "0.200")], 1);
    expect(visibleResults(state)?.entries[0]?.id).toBe(2);
  });

  it("clears error spans once the text changes", () => {
    let state = withText(initialState(), "X11 and", false);
    const { state: sent, ticket } = beginRequest(state);
    state = applyError(sent, ticket, "X11 and", {
      code: "syntax_error",
      message: "expected a variable",
      span: { start: 7, end: 7 },
    });
    expect(visibleError(state)?.code).toBe("syntax_error");
    state = withText(state, "X11 and X12", true);
    expect(visibleError(state)).toBeNull();
  });

  it("keeps stale errors from resurfacing on old tickets", () => {
    let state = withText(initialState(), "X99", true);
    const first = beginRequest(state);
    const second = beginRequest(first.state);
    state = applyError(second.state, first.ticket, "X99", {
      code: "unbound_variable",
      message: "unbound variable: X99",
    });
    expect(visibleError(state)).toBeNull();
  });

  it("wraps the formula for one-click relaxation", () => {
    expect(relaxText("X11^2 and (!X12)")).toBe("2*(X11^2 and (!X12))");
  });

  it("splits text around a span for highlighting", () => {
    expect(splitSpan("X11 and and X12", { start: 8, end: 11 })).toEqual([
      "X11 and ", "and", " X12",
    ]);
    // zero-width span at end of input still shows a mark
    expect(splitSpan("X11 and", { start: 7, end: 7 })).toEqual(["X11 and", "", ""]);
    expect(splitSpan("X11 and ", { start: 7, end: 7 })).toEqual(["X11 and", " ", ""]);
  });
});
