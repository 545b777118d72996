/** Normalization editor: raw extrema per column, editable user bounds and
 * the reversal checkbox, saved atomically via PUT /normalization.
 */

import { ApiError, NormalizationEntry, SchemaColumn, ServiceClient } from "./api.js";
import { el, heading } from "./query_page.js";

interface EditorRow {
  column: SchemaColumn;
  min: HTMLInputElement;
  max: HTMLInputElement;
  reversed: HTMLInputElement;
  note: HTMLElement;
}

export class NormalizationPage {
  readonly root: HTMLElement;
  private rows: EditorRow[] = [];
  private status: HTMLElement;
  private saveButton: HTMLButtonElement;
  private table: HTMLTableElement;

  constructor(private client: ServiceClient, private onSaved?: (version: number) => void) {
    this.root = el("section", "page normalization-page");
    this.status = el("div", "status");
    this.saveButton = el("button", "submit") as HTMLButtonElement;
    this.saveButton.textContent = "Save normalization";
    this.saveButton.addEventListener("click", () => void this.save());
    this.table = el("table", "norm-table") as HTMLTableElement;
    this.root.append(
      heading(
        "Normalization",
        "choose per-column bounds; tick 'reversed' where smaller raw values are better",
      ),
      this.table,
      this.saveButton,
      this.status,
    );
  }

  async load(): Promise<void> {
    const schema = await this.client.getSchema();
    this.rows = [];
    this.table.replaceChildren();
    const head = this.table.createTHead().insertRow();
    for (const title of ["column", "variable", "raw min", "raw max", "user min", "user max", "reversed", ""]) {
      const cell = document.createElement("th");
      cell.textContent = title;
      head.append(cell);
    }
    const body = this.table.createTBody();
    for (const column of schema.columns) {
      if (!column.variable || !column.normalization) continue;
      const row = body.insertRow();
      row.insertCell().textContent = column.name;
      row.insertCell().textContent = column.variable;
      row.insertCell().textContent = column.min ?? "";
      row.insertCell().textContent = column.max ?? "";
      const min = numberInput(column.normalization.min);
      const max = numberInput(column.normalization.max);
      const reversed = document.createElement("input");
      reversed.type = "checkbox";
      reversed.checked = column.normalization.reversed;
      const note = el("span", "row-note");
      row.insertCell().append(min);
      row.insertCell().append(max);
      row.insertCell().append(reversed);
      row.insertCell().append(note);
      const editor = { column, min, max, reversed, note };
      const validate = () => this.validateRow(editor);
      min.addEventListener("input", validate);
      max.addEventListener("input", validate);
      this.rows.push(editor);
    }
    this.status.textContent = `snapshot v${schema.version}`;
  }

  /** Client-side min < max check; blocks submission before the request. */
  private validateRow(row: EditorRow): boolean {
    const ok = Number(row.min.value) < Number(row.max.value);
    row.note.textContent = ok ? "" : "min must be below max";
    row.note.classList.toggle("invalid", !ok);
    this.saveButton.disabled = !this.rows.every(
      (r) => Number(r.min.value) < Number(r.max.value),
    );
    return ok;
  }

  private async save(): Promise<void> {
    const spec: Record<string, NormalizationEntry> = {};
    for (const row of this.rows) {
      if (!this.validateRow(row)) return;
      spec[row.column.name] = {
        min: Number(row.min.value),
        max: Number(row.max.value),
        reversed: row.reversed.checked,
      };
    }
    try {
      const body = await this.client.putNormalization(spec);
      this.status.textContent = `saved → snapshot v${body.version}`;
      this.status.classList.remove("invalid");
      this.onSaved?.(body.version);
    } catch (error) {
      this.status.textContent =
        error instanceof ApiError
          ? `${error.body.code}: ${error.body.message}`
          : String(error);
      this.status.classList.add("invalid");
    }
  }
}

function numberInput(value: number): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "number";
  input.step = "any";
  input.value = String(value);
  return input;
}
