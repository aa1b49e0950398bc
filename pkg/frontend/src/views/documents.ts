// Views 1.b + 1.c: ranked document list and the per-document keyword strip.
// Rows appear exactly in API response order.

import type { RankedDocument } from "../types.js";

export function renderDocumentList(
  container: HTMLElement,
  documents: RankedDocument[],
  onOpen: (doc: RankedDocument) => void,
): void {
  container.replaceChildren();
  if (documents.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No documents match this selection.";
    container.appendChild(empty);
    return;
  }
  const list = document.createElement("ol");
  list.className = "document-list";
  for (const doc of documents) {
    const row = document.createElement("li");
    row.className = "document-row";
    row.dataset.documentId = doc.id;

    const title = document.createElement("span");
    title.className = "doc-title";
    title.textContent = doc.title;

    const meta = document.createElement("span");
    meta.className = "doc-meta";
    meta.textContent = ` ${doc.venue} ${doc.year} · ${doc.collection} · ${doc.match_count} match${doc.match_count === 1 ? "" : "es"}`;

    row.append(title, meta);

    const strip = document.createElement("span");
    strip.className = "doc-tokens";
    for (const token of doc.matched_tokens) {
      const chip = document.createElement("span");
      chip.className = "token-chip matched";
      chip.textContent = token;
      strip.appendChild(chip);
    }
    row.appendChild(strip);

    row.addEventListener("click", () => onOpen(doc));
    list.appendChild(row);
  }
  container.appendChild(list);
}
