/** Boot: two tabs over one service client, mirroring the two key pages. */

import { ServiceClient } from "./api.js";
import { NormalizationPage } from "./normalization_page.js";
import { QueryPage } from "./query_page.js";

function main(): void {
  const app = document.getElementById("app");
  if (!app) throw new Error("missing #app mount point");

  const params = new URLSearchParams(window.location.search);
  const base = params.get("service") ?? "http://127.0.0.1:8000";
  const client = new ServiceClient(base);

  const queryPage = new QueryPage(client);
  const normalizationPage = new NormalizationPage(client);

  const tabs = document.createElement("nav");
  tabs.className = "tabs";
  const panes: [string, HTMLElement][] = [
    ["Query", queryPage.root],
    ["Normalization", normalizationPage.root],
  ];
  for (const [title, pane] of panes) {
    const button = document.createElement("button");
    button.textContent = title;
    button.addEventListener("click", () => {
      for (const [, other] of panes) other.hidden = other !== pane;
      if (pane === normalizationPage.root) void normalizationPage.load();
    });
    tabs.append(button);
  }
  normalizationPage.root.hidden = true;

  const banner = document.createElement("div");
  banner.className = "banner";
  banner.textContent = `service: ${base}`;

  app.append(tabs, banner, queryPage.root, normalizationPage.root);
}

main();
