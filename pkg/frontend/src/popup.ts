// Document metadata pop-up: dismissible overlay, Escape closes it.

import type { DocumentDetail } from "./types.js";

export function showDocumentPopup(
  detail: DocumentDetail,
  host: HTMLElement = document.body,
): HTMLElement {
  closeDocumentPopup(host);

  const overlay = document.createElement("div");
  overlay.className = "popup-overlay";

  const box = document.createElement("div");
  box.className = "popup";
  box.setAttribute("role", "dialog");

  const title = document.createElement("h2");
  title.textContent = detail.title;

  const authors = document.createElement("p");
  authors.className = "popup-authors";
  authors.textContent = detail.authors.join(", ");

  const venue = document.createElement("p");
  venue.className = "popup-venue";
  venue.textContent = `${detail.venue} (${detail.year}) — collection ${detail.collection}`;

  box.append(title, authors, venue);

  if (detail.match_count !== undefined) {
    const match = document.createElement("p");
    match.className = "popup-match";
    match.textContent = `${detail.match_count} matching keyword${detail.match_count === 1 ? "" : "s"}`;
    box.appendChild(match);
  }

  const keywords = document.createElement("p");
  keywords.className = "popup-keywords";
  keywords.textContent = detail.raw_keywords.join(" · ");
  box.appendChild(keywords);

  const close = document.createElement("button");
  close.className = "popup-close";
  close.textContent = "Close";
  close.addEventListener("click", () => closeDocumentPopup(host));
  box.appendChild(close);

  overlay.appendChild(box);
  overlay.addEventListener("click", (event) => {
    if (event.target === overlay) closeDocumentPopup(host);
  });

  const onKey = (event: KeyboardEvent) => {
    if (event.key === "Escape") closeDocumentPopup(host);
  };
  document.addEventListener("keydown", onKey);
  (overlay as HTMLElement & { _onKey?: typeof onKey })._onKey = onKey;

  host.appendChild(overlay);
  return overlay;
}

export function showPopupError(message: string, host: HTMLElement = document.body): void {
  const overlay = host.querySelector<HTMLElement>(".popup-overlay");
  const box = overlay?.querySelector(".popup");
  if (!box) return;
  const error = document.createElement("p");
  error.className = "popup-error";
  error.textContent = message;
  box.appendChild(error);
}

export function closeDocumentPopup(host: HTMLElement = document.body): void {
  const overlay = host.querySelector<HTMLElement & { _onKey?: (e: KeyboardEvent) => void }>(
    ".popup-overlay",
  );
  if (overlay) {
    if (overlay._onKey) document.removeEventListener("keydown", overlay._onKey);
    overlay.remove();
  }
}
