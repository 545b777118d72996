/** Query-pane state and the stale-response guard.
 *
 * Invariants kept here rather than in the DOM code:
 *  - results are shown only for the exact formula text that produced them;
 *  - an error span is shown only while the text it was reported against is
 *    still the current text;
 *  - at most one in-flight query is honored per pane: responses for
 *    superseded requests are discarded by ticket comparison.
 */

import { ApiErrorBody, QueryEntry } from "./api.js";

export interface QueryState {
  formulaText: string;
  parsedOk: boolean;
  lastError: { body: ApiErrorBody; forText: string } | null;
  limit: number | null;
  onlyPositive: boolean;
  results: { entries: QueryEntry[]; version: number; forText: string } | null;
  requestTicket: number;
}

export function initialState(): QueryState {
  return {
    formulaText: "",
    parsedOk: false,
    lastError: null,
    limit: 10,
    onlyPositive: false,
    results: null,
    requestTicket: 0,
  };
}

export function withText(state: QueryState, text: string, parsedOk: boolean): QueryState {
  return {
    ...state,
    formulaText: text,
    parsedOk,
    lastError: state.lastError && state.lastError.forText === text ? state.lastError : null,
  };
}

/** Claim a ticket before sending; only the matching response may land. */
export function beginRequest(state: QueryState): { state: QueryState; ticket: number } {
  const ticket = state.requestTicket + 1;
  return { state: { ...state, requestTicket: ticket }, ticket };
}

export function applyResults(
  state: QueryState,
  ticket: number,
  forText: string,
  entries: QueryEntry[],
  version: number,
): QueryState {
  if (ticket !== state.requestTicket) return state; // superseded request
  return { ...state, results: { entries, version, forText }, lastError: null };
}

export function applyError(
  state: QueryState,
  ticket: number,
  forText: string,
  body: ApiErrorBody,
): QueryState {
  if (ticket !== state.requestTicket) return state;
  return { ...state, lastError: { body, forText }, results: state.results };
}

/** Results to display, or null when they belong to an older formula text. */
export function visibleResults(state: QueryState) {
  if (!state.results || state.results.forText !== state.formulaText) return null;
  return state.results;
}

/** Error span to highlight, or null when it no longer matches the text. */
export function visibleError(state: QueryState) {
  if (!state.lastError || state.lastError.forText !== state.formulaText) return null;
  return state.lastError.body;
}

/** The one-click relaxation: wrap the current query in 2*( ... ). */
export function relaxText(text: string): string {
  return `2*(${text})`;
}

/** Split text into [before, marked, after] for span highlighting. */
export function splitSpan(
  text: string,
  span: { start: number; end: number },
): [string, string, string] {
  const start = Math.max(0, Math.min(span.start, text.length));
  const end = Math.max(start, Math.min(span.end, text.length));
  // zero-width spans (e.g. unexpected end of input) still need a visible mark
  const shownEnd = end === start ? Math.min(start + 1, text.length) : end;
  return [text.slice(0, start), text.slice(start, shownEnd), text.slice(shownEnd)];
}
