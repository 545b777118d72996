/** Query page: formula textarea with live glyph rendering, ranked results,
 * one-click relaxation, and the SQL drawer toggle.
 */

import { ApiError, ServiceClient } from "./api.js";
import { tryParse } from "./parser.js";
import { bracketDegree, prettyFormula } from "./pretty.js";
import {
  QueryState,
  applyError,
  applyResults,
  beginRequest,
  initialState,
  relaxText,
  splitSpan,
  visibleError,
  visibleResults,
  withText,
} from "./state.js";
import { TranspileDrawer } from "./transpile_drawer.js";

export class QueryPage {
  readonly root: HTMLElement;
  private state: QueryState = initialState();
  private input: HTMLTextAreaElement;
  private preview: HTMLElement;
  private errorBox: HTMLElement;
  private resultsBox: HTMLElement;
  private submitButton: HTMLButtonElement;
  private relaxButton: HTMLButtonElement;
  private limitInput: HTMLInputElement;
  private positiveInput: HTMLInputElement;
  private drawer: TranspileDrawer;

  constructor(private client: ServiceClient) {
    this.root = el("section", "page query-page");
    this.input = el("textarea", "formula-input") as HTMLTextAreaElement;
    this.input.rows = 2;
    this.input.placeholder = "X11^2 and (!X12)";
    this.preview = el("div", "formula-preview");
    this.errorBox = el("div", "error-box");
    this.resultsBox = el("div", "results-box");
    this.submitButton = el("button", "submit") as HTMLButtonElement;
    this.submitButton.textContent = "Query";
    this.relaxButton = el("button", "relax") as HTMLButtonElement;
    this.relaxButton.textContent = "Relax 2*( … )";
    this.relaxButton.title = "Wrap the query in a 'somewhat' hedge and resubmit";
    this.limitInput = el("input") as HTMLInputElement;
    this.limitInput.type = "number";
    this.limitInput.min = "1";
    this.limitInput.value = "10";
    this.positiveInput = el("input") as HTMLInputElement;
    this.positiveInput.type = "checkbox";
    this.drawer = new TranspileDrawer(client, () => this.state.formulaText);

    const controls = el("div", "controls");
    controls.append(
      this.submitButton,
      this.relaxButton,
      labeled("limit", this.limitInput),
      labeled("only positive", this.positiveInput),
      this.drawer.toggleButton,
    );
    this.root.append(
      heading("Query", "write a formula over X0…X14 and rank the rows"),
      this.input,
      this.preview,
      this.errorBox,
      controls,
      this.resultsBox,
      this.drawer.root,
    );

    this.input.addEventListener("input", () => this.onEdit());
    this.submitButton.addEventListener("click", () => void this.submit());
    this.relaxButton.addEventListener("click", () => void this.relax());
    this.onEdit();
  }

  private onEdit(): void {
    const text = this.input.value;
    const outcome = tryParse(text);
    this.state = withText(this.state, text, outcome.ok);
    if (outcome.ok) {
      this.preview.textContent = prettyFormula(outcome.node);
      this.preview.classList.remove("empty");
    } else {
      this.preview.textContent = text.trim() ? "—" : "";
      this.preview.classList.add("empty");
    }
    this.submitButton.disabled = text.trim() === "";
    this.relaxButton.disabled = text.trim() === "";
    this.render();
  }

  private async submit(): Promise<void> {
    const text = this.state.formulaText;
    const limit = Number(this.limitInput.value) || undefined;
    const { state, ticket } = beginRequest(this.state);
    this.state = state;
    try {
      const body = await this.client.query(text, limit, this.positiveInput.checked);
      this.state = applyResults(this.state, ticket, text, body.entries, body.version);
    } catch (error) {
      if (error instanceof ApiError) {
        this.state = applyError(this.state, ticket, text, error.body);
      } else {
        this.state = applyError(this.state, ticket, text, {
          code: "internal",
          message: String(error),
        });
      }
    }
    this.render();
  }

  private async relax(): Promise<void> {
    this.input.value = relaxText(this.state.formulaText);
    this.onEdit();
    await this.submit();
  }

  private render(): void {
    const error = visibleError(this.state);
    this.errorBox.replaceChildren();
    if (error) {
      const line = el("div", "error-message");
      line.textContent = `${error.code}: ${error.message}`;
      this.errorBox.append(line);
      if (error.span) {
        const [before, marked, after] = splitSpan(this.state.formulaText, error.span);
        const mirror = el("div", "error-mirror");
        const mark = el("span", "error-span");
        mark.textContent = marked || " ";
        mirror.append(before, mark, after);
        this.errorBox.append(mirror);
      }
    }

    const results = visibleResults(this.state);
    this.resultsBox.replaceChildren();
    if (!results) return;
    const meta = el("div", "results-meta");
    meta.textContent = `${results.entries.length} rows · snapshot v${results.version}`;
    const table = el("table", "results-table") as HTMLTableElement;
    const head = table.createTHead().insertRow();
    for (const title of ["id", "car", "degree"]) {
      const cell = document.createElement("th");
      cell.textContent = title;
      head.append(cell);
    }
    const body = table.createTBody();
    for (const entry of results.entries) {
      const row = body.insertRow();
      row.insertCell().textContent = String(entry.id);
      const name = ["manufacturer", "model", "trim"]
        .map((key) => entry.display[key])
        .filter(Boolean)
        .join(" ");
      row.insertCell().textContent = name || Object.values(entry.display).join(" ");
      const degree = row.insertCell();
      degree.textContent = bracketDegree(entry.degree);
      degree.className = entry.degree_exact === "1" ? "degree full" : "degree";
    }
    this.resultsBox.append(meta, table);
  }
}

function el(tag: string, className = ""): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  return node;
}

function labeled(text: string, control: HTMLElement): HTMLElement {
  const label = el("label", "labeled");
  label.append(control, text);
  return label;
}

function heading(title: string, hint: string): HTMLElement {
  const box = el("div", "heading");
  const h = el("h2");
  h.textContent = title;
  const p = el("p", "hint");
  p.textContent = hint;
  box.append(h, p);
  return box;
}

export { el, heading, labeled };
