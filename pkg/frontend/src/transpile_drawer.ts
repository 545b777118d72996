/** SQL drawer: shows the SELECT statement for the current formula via the
 * service, with an editable table name and copy-to-clipboard.
 */

import { ApiError, ServiceClient } from "./api.js";

export const DEFAULT_TABLE = "auto";
export const DEFAULT_PROJECTION = ["id", "trim", "length", "seats", "horsepower"];

export class TranspileDrawer {
  readonly root: HTMLElement;
  readonly toggleButton: HTMLButtonElement;
  private output: HTMLElement;
  private tableInput: HTMLInputElement;
  private projectionInput: HTMLInputElement;
  private copyButton: HTMLButtonElement;
  private open = false;

  constructor(private client: ServiceClient, private currentFormula: () => string) {
    this.root = document.createElement("aside");
    this.root.className = "drawer";
    this.root.hidden = true;

    this.toggleButton = document.createElement("button");
    this.toggleButton.textContent = "SQL";
    this.toggleButton.title = "Show the SQL translation of the current formula";
    this.toggleButton.addEventListener("click", () => void this.toggle());

    this.tableInput = document.createElement("input");
    this.tableInput.value = DEFAULT_TABLE;
    this.tableInput.addEventListener("change", () => void this.refresh());

    this.projectionInput = document.createElement("input");
    this.projectionInput.value = DEFAULT_PROJECTION.join(", ");
    this.projectionInput.addEventListener("change", () => void this.refresh());

    this.copyButton = document.createElement("button");
    this.copyButton.textContent = "Copy";
    this.copyButton.addEventListener("click", () => {
      void navigator.clipboard?.writeText(this.output.textContent ?? "");
    });

    this.output = document.createElement("pre");
    this.output.className = "sql-output";

    const bar = document.createElement("div");
    bar.className = "drawer-bar";
    const tableLabel = document.createElement("label");
    tableLabel.append("table ", this.tableInput);
    const projectionLabel = document.createElement("label");
    projectionLabel.append("columns ", this.projectionInput);
    bar.append(tableLabel, projectionLabel, this.copyButton);
    this.root.append(bar, this.output);
  }

  private async toggle(): Promise<void> {
    this.open = !this.open;
    this.root.hidden = !this.open;
    if (this.open) await this.refresh();
  }

  async refresh(): Promise<void> {
    const formula = this.currentFormula();
    if (!formula.trim()) {
      this.output.textContent = "";
      return;
    }
    const projected = this.projectionInput.value
      .split(",")
      .map((name) => name.trim())
      .filter(Boolean);
    try {
      const body = await this.client.transpile(formula, this.tableInput.value, projected, false);
      this.output.textContent = body.sql;
      this.output.classList.remove("error");
    } catch (error) {
      this.output.textContent =
        error instanceof ApiError ? `${error.body.code}: ${error.body.message}` : String(error);
      this.output.classList.add("error");
    }
  }
}
