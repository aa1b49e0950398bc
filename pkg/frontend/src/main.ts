// Bootstrap: load entry points, wire brushing to the linked views.
// Panel arrangement: entry points left (1.a), documents center (1.b/1.c),
// frequency lists right (1.d1, 1.d2).

import { ApiClient } from "./api.js";
import { showDocumentPopup, showPopupError } from "./popup.js";
import { togglePalette } from "./palette.js";
import { type Slot, ViewState } from "./state.js";
import type { EntryPoint, RankedDocument } from "./types.js";
import { renderDocumentList } from "./views/documents.js";
import { markBrushed, renderEntryPoints } from "./views/entryPoints.js";
import { renderFrequencyList } from "./views/frequencies.js";

export interface App {
  state: ViewState;
  reload: () => Promise<void>;
}

function el(root: HTMLElement, id: string): HTMLElement {
  const node = root.querySelector<HTMLElement>(`#${id}`);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

export function initApp(root: HTMLElement, api: ApiClient): App {
  const panelsBox = el(root, "entry-points");
  const documentsBox = el(root, "documents");
  const frequencyBoxes: Record<Slot, HTMLElement> = {
    0: el(root, "frequencies-s1"),
    1: el(root, "frequencies-s2"),
  };
  const banner = el(root, "error-banner");
  const state = new ViewState(api);
  let entryPoints: EntryPoint[] = [];

  const activeSelectionTokens = (): string[] =>
    state.slot(state.lastBrushed)?.selection.tokens ??
    state.slot(0)?.selection.tokens ??
    [];

  const openPopup = async (doc: RankedDocument) => {
    try {
      const detail = await api.document(doc.id, activeSelectionTokens());
      showDocumentPopup(detail);
    } catch (err) {
      showDocumentPopup({
        id: doc.id,
        title: doc.title,
        authors: doc.authors,
        year: doc.year,
        venue: doc.venue,
        collection: doc.collection,
        raw_keywords: [],
        tokens: [],
        surfaces: {},
      });
      showPopupError(err instanceof Error ? err.message : String(err));
    }
  };

  state.onChange((slot, data) => {
    renderFrequencyList(
      frequencyBoxes[slot],
      slot === 0 ? "Selection s1" : "Selection s2",
      data?.frequencies ?? null,
      data?.stale ?? false,
    );
    // document list + keyword strips follow the most recent brush
    const docsData = state.slot(state.lastBrushed) ?? state.slot(0) ?? state.slot(1);
    documentsBox.classList.toggle("stale", docsData?.stale ?? false);
    renderDocumentList(documentsBox, docsData?.documents?.documents ?? [], openPopup);
    const brushed = [state.slot(0), state.slot(1)]
      .filter((s) => s !== null)
      .map((s) => s!.selection.entryPointId);
    markBrushed(panelsBox, brushed);
  });

  const brush = (ep: EntryPoint) => {
    void state.brush({
      entryPointId: ep.id,
      tokens: ep.members.map((m) => m.token),
    });
  };

  const reload = async () => {
    banner.hidden = true;
    try {
      entryPoints = await api.entryPoints();
      renderEntryPoints(panelsBox, entryPoints, brush);
    } catch (err) {
      banner.hidden = false;
      banner.replaceChildren();
      const message = document.createElement("span");
      message.textContent = `Could not reach the API: ${
        err instanceof Error ? err.message : String(err)
      }`;
      const retry = document.createElement("button");
      retry.id = "retry";
      retry.textContent = "Retry";
      retry.addEventListener("click", () => void reload());
      banner.append(message, retry);
    }
  };

  const paletteButton = root.querySelector<HTMLElement>("#palette-toggle");
  paletteButton?.addEventListener("click", () => {
    togglePalette();
    renderEntryPoints(panelsBox, entryPoints, brush);
  });

  void reload();
  return { state, reload };
}

declare global {
  interface Window {
    LBDX_API_BASE?: string;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  initApp(
    document.getElementById("app") as HTMLElement,
    new ApiClient(window.LBDX_API_BASE ?? ""),
  );
}
