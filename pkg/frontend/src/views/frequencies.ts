// Views 1.d1/1.d2: rank-frequency token lists, one per active selection.

import type { FrequenciesResponse } from "../types.js";

export function renderFrequencyList(
  container: HTMLElement,
  label: string,
  response: FrequenciesResponse | null,
  stale: boolean,
): void {
  container.replaceChildren();
  const header = document.createElement("h3");
  header.textContent = label;
  container.appendChild(header);

  if (stale) {
    const flag = document.createElement("p");
    flag.className = "stale-flag";
    flag.textContent = "Out of date — last fetch failed.";
    container.appendChild(flag);
  }
  if (!response) {
    return;
  }
  const list = document.createElement("ol");
  list.className = "frequency-list";
  for (const item of response.frequencies) {
    const row = document.createElement("li");
    row.dataset.token = item.token;
    const surface = document.createElement("span");
    surface.className = "freq-surface";
    surface.textContent = item.surface;
    const count = document.createElement("span");
    count.className = "freq-count";
    count.textContent = String(item.count);
    row.append(surface, count);
    list.appendChild(row);
  }
  container.appendChild(list);
}
