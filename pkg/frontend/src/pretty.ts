/** Glyph rendering of parsed queries. Display-only: the text sent to the
 * service is always the user's raw input, never this rendering.
 */

import { Node } from "./parser.js";

const PREC: Record<Node["type"], number> = {
  iff: 0,
  impl: 1,
  or: 2,
  and: 3,
  oplus: 4,
  ominus: 5,
  odot: 6,
  neg: 7,
  itersum: 7,
  iterprod: 8,
  var: 9,
  falsum: 9,
  verum: 9,
  crisp: 9,
};

const SUPERSCRIPTS: Record<string, string> = {
  "0": "⁰", "1": "¹", "2": "²", "3": "³", "4": "⁴",
  "5": "⁵", "6": "⁶", "7": "⁷", "8": "⁸", "9": "⁹",
};

function sup(count: number): string {
  return String(count).split("").map((d) => SUPERSCRIPTS[d] ?? d).join("");
}

function emit(node: Node, floor: number): string {
  let text: string;
  switch (node.type) {
    case "var":
      text = node.name;
      break;
    case "falsum":
      text = "⊥";
      break;
    case "verum":
      text = "⊤";
      break;
    case "crisp":
      text =
        node.direction === "geq"
          ? `(${node.threshold} ≤ ${node.variable})`
          : `(${node.variable} ≤ ${node.threshold})`;
      break;
    case "neg":
      text = `¬${emit(node.arg, PREC.neg)}`;
      break;
    case "itersum":
      text = `${node.count}·${emit(node.arg, PREC.itersum)}`;
      break;
    case "iterprod":
      text = `${emit(node.arg, PREC.iterprod)}${sup(node.count)}`;
      break;
    case "iff":
      text = `${emit(node.left, PREC.impl)} ↔ ${emit(node.right, PREC.impl)}`;
      break;
    case "impl":
      text = `${emit(node.left, PREC.or)} → ${emit(node.right, PREC.impl)}`;
      break;
    case "or":
      text = `${emit(node.left, PREC.or)} ∨ ${emit(node.right, PREC.and)}`;
      break;
    case "and":
      text = `${emit(node.left, PREC.and)} ∧ ${emit(node.right, PREC.oplus)}`;
      break;
    case "oplus":
      text = `${emit(node.left, PREC.oplus)} ⊕ ${emit(node.right, PREC.ominus)}`;
      break;
    case "ominus":
      text = `${emit(node.left, PREC.ominus)} ⊖ ${emit(node.right, PREC.odot)}`;
      break;
    case "odot":
      text = `${emit(node.left, PREC.odot)} ⊙ ${emit(node.right, PREC.neg)}`;
      break;
  }
  return PREC[node.type] < floor ? `(${text})` : text;
}

/** Render a parsed query with logic glyphs and minimal parentheses. */
export function prettyFormula(node: Node): string {
  return emit(node, 0);
}

/** Degrees arrive as 3-decimal strings and are displayed verbatim in the
 * bracketed style; no arithmetic happens client-side. */
export function bracketDegree(degree: string): string {
  return `[${degree}]`;
}
