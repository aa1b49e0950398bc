// Integration tests against a mocked API: brushing contracts, view
// consistency, class colors, and failure handling.

import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { initApp } from "../src/main.js";
import { setPalette } from "../src/palette.js";
import { DOCUMENTS, ENTRY_POINTS, mockApi, settle, shell } from "./helpers.js";

afterEach(() => {
  vi.unstubAllGlobals();
  setPalette("classic");
  document.body.innerHTML = "";
});

function panel(root: HTMLElement, epId: number): HTMLElement {
  const node = root.querySelector<HTMLElement>(
    `.entry-point-panel[data-entry-point-id="${epId}"]`,
  );
  if (!node) throw new Error(`panel ${epId} not rendered`);
  return node;
}

describe("entry-point panels", () => {
  it("renders one panel per entry point at server coordinates", async () => {
    mockApi();
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    const panels = root.querySelectorAll(".entry-point-panel");
    expect(panels.length).toBe(ENTRY_POINTS.length);
    const circles = panel(root, 1).querySelectorAll("circle");
    expect(circles.length).toBe(3);
  });

  it("maps class a to red, b to yellow, c to blue", async () => {
    mockApi();
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    const byClass: Record<string, string> = {};
    for (const node of panel(root, 1).querySelectorAll<SVGCircleElement>("circle")) {
      const cls = node.getAttribute("class")!.match(/node-([abc])/)![1];
      byClass[cls] = node.getAttribute("fill")!;
    }
    expect(byClass).toEqual({ a: "red", b: "yellow", c: "blue" });
  });

  it("scales label size with token frequency", async () => {
    mockApi();
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    const sizes = new Map<string, number>();
    for (const label of panel(root, 1).querySelectorAll<SVGTextElement>("text")) {
      sizes.set(label.textContent!, Number(label.getAttribute("font-size")));
    }
    // frequency 3 ("alignment") renders larger than frequency 1 ("collation")
    expect(sizes.get("alignment")!).toBeGreaterThan(sizes.get("collation")!);
  });

  it("shows an empty state when there are no entry points", async () => {
    mockApi({ "/api/entry-points": () => [] });
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    expect(root.querySelector("#entry-points .empty-state")).toBeTruthy();
  });

  it("shows an error banner with a retry affordance on API failure", async () => {
    let fail = true;
    mockApi({
      "/api/entry-points": () => {
        if (fail) throw new Error("boom");
        return ENTRY_POINTS;
      },
    });
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    const banner = root.querySelector<HTMLElement>("#error-banner")!;
    expect(banner.hidden).toBe(false);
    fail = false;
    banner.querySelector<HTMLButtonElement>("#retry")!.click();
    await settle();
    expect(banner.hidden).toBe(true);
    expect(root.querySelectorAll(".entry-point-panel").length).toBe(2);
  });
});

describe("brushing", () => {
  it("issues exactly one documents and one frequencies fetch with the panel's tokens", async () => {
    const log = mockApi();
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    panel(root, 1).click();
    await settle();
    expect(log.byPath("/api/documents?")).toEqual([
      "/api/documents?tokens=collat%2Calign%2Cdiff",
    ]);
    expect(log.byPath("/api/token-frequencies")).toEqual([
      "/api/token-frequencies?tokens=collat%2Calign%2Cdiff",
    ]);
  });

  it("renders documents in exactly the response order", async () => {
    mockApi();
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    panel(root, 1).click();
    await settle();
    const ids = [...root.querySelectorAll<HTMLElement>(".document-row")].map(
      (row) => row.dataset.documentId,
    );
    expect(ids).toEqual(
      DOCUMENTS["collat,align,diff"].documents.map((d) => d.id),
    );
  });

  it("keeps two concurrent selections with independent frequency lists", async () => {
    mockApi();
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    panel(root, 1).click();
    await settle();
    panel(root, 2).click();
    await settle();
    const s1 = [...root.querySelectorAll<HTMLElement>("#frequencies-s1 li")].map(
      (li) => li.dataset.token,
    );
    const s2 = [...root.querySelectorAll<HTMLElement>("#frequencies-s2 li")].map(
      (li) => li.dataset.token,
    );
    expect(s1).toEqual(["align", "collat"]);
    expect(s2).toEqual(["museum"]);
    // both panels stay marked as brushed
    expect(panel(root, 1).classList.contains("brushed")).toBe(true);
    expect(panel(root, 2).classList.contains("brushed")).toBe(true);
  });

  it("re-brushing the same panel is idempotent", async () => {
    const log = mockApi();
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    panel(root, 1).click();
    await settle();
    const before = document.querySelector("#documents")!.innerHTML;
    panel(root, 1).click();
    await settle();
    expect(document.querySelector("#documents")!.innerHTML).toBe(before);
    // still a single selection, refetched into the same slot
    expect(root.querySelectorAll("#frequencies-s2 li").length).toBe(0);
    expect(log.byPath("/api/documents?").length).toBe(2);
  });

  it("flags views as stale when a brush fetch fails", async () => {
    let healthy = true;
    mockApi({
      "/api/documents": (url) => {
        if (!healthy) throw new Error("down");
        return DOCUMENTS[url.searchParams.get("tokens") ?? ""];
      },
    });
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    healthy = false;
    panel(root, 1).click();
    await settle();
    expect(root.querySelector("#frequencies-s1 .stale-flag")).toBeTruthy();
    expect(
      root.querySelector("#documents")!.classList.contains("stale"),
    ).toBe(true);
  });
});

describe("document popup", () => {
  it("opens with metadata and match count, closes on escape", async () => {
    mockApi();
    const root = shell();
    initApp(root, new ApiClient());
    await settle();
    panel(root, 1).click();
    await settle();
    root.querySelector<HTMLElement>(".document-row")!.click();
    await settle();
    const popup = document.querySelector(".popup")!;
    expect(popup.querySelector("h2")!.textContent).toBe("Title t4");
    expect(popup.querySelector(".popup-authors")!.textContent).toContain("Author t4");
    expect(popup.querySelector(".popup-match")!.textContent).toContain("1 matching");
    document.dispatchEvent(new KeyboardEvent("keydown", { key: "Escape" }));
    expect(document.querySelector(".popup-overlay")).toBeNull();
    // underlying views untouched
    expect(root.querySelectorAll(".document-row").length).toBe(3);
  });
});
