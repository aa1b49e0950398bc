import { vi } from "vitest";

import type {
  DocumentsResponse,
  EntryPoint,
  FrequenciesResponse,
  RankedDocument,
} from "../src/types.js";

export const ENTRY_POINTS: EntryPoint[] = [
  {
    id: 1,
    members: [
      { token: "collat", surface: "collation", class: "a", frequency: 1 },
      { token: "align", surface: "alignment", class: "b", frequency: 3 },
      { token: "diff", surface: "diffing", class: "c", frequency: 1 },
    ],
    mst: [
      { u: "align", v: "collat", distance: 0.2 },
      { u: "align", v: "diff", distance: 0.3 },
    ],
    anchors: ["collat"],
    layout: { collat: [0.1, 0.2], align: [0.5, 0.5], diff: [0.9, 0.8] },
  },
  {
    id: 2,
    members: [
      { token: "museum", surface: "museum", class: "a", frequency: 1 },
      { token: "visitor", surface: "visitors", class: "a", frequency: 2 },
    ],
    mst: [{ u: "museum", v: "visitor", distance: 0.15 }],
    anchors: ["museum"],
    layout: { museum: [0.2, 0.4], visitor: [0.8, 0.6] },
  },
];

export function doc(id: string, matches: string[], year = 2019): RankedDocument {
  return {
    id,
    title: `Title ${id}`,
    authors: [`Author ${id}`],
    year,
    venue: "Venue",
    collection: id.startsWith("t") ? "T" : "S",
    match_count: matches.length,
    matched_tokens: matches,
  };
}

export const DOCUMENTS: Record<string, DocumentsResponse> = {
  "collat,align,diff": {
    documents: [doc("t4", ["collat", "align"]), doc("s1", ["align"]), doc("s5", ["diff"])],
    warnings: { unknown_tokens: [] },
  },
  "museum,visitor": {
    documents: [doc("t5", ["museum", "visitor"])],
    warnings: { unknown_tokens: [] },
  },
};

export const FREQUENCIES: Record<string, FrequenciesResponse> = {
  "collat,align,diff": {
    frequencies: [
      { token: "align", surface: "alignment", count: 3 },
      { token: "collat", surface: "collation", count: 1 },
    ],
    warnings: { unknown_tokens: [] },
  },
  "museum,visitor": {
    frequencies: [{ token: "museum", surface: "museum", count: 1 }],
    warnings: { unknown_tokens: [] },
  },
};

export interface FetchLog {
  calls: string[];
  byPath(path: string): string[];
}

/** Stub global fetch with a router over the fixture data. */
export function mockApi(
  overrides: Partial<Record<string, (url: URL) => unknown>> = {},
): FetchLog {
  const calls: string[] = [];
  vi.stubGlobal(
    "fetch",
    vi.fn(async (input: RequestInfo | URL) => {
      const url = new URL(String(input), "http://test.local");
      calls.push(url.pathname + url.search);
      const route = overrides[url.pathname];
      let body: unknown;
      if (route) {
        body = await route(url);
      } else if (url.pathname === "/api/entry-points") {
        body = ENTRY_POINTS;
      } else if (url.pathname === "/api/documents") {
        body = DOCUMENTS[url.searchParams.get("tokens") ?? ""];
      } else if (url.pathname === "/api/token-frequencies") {
        body = FREQUENCIES[url.searchParams.get("tokens") ?? ""];
      } else if (url.pathname.startsWith("/api/documents/")) {
        const id = decodeURIComponent(url.pathname.split("/").pop()!);
        body = {
          ...doc(id, ["collat"]),
          raw_keywords: ["collation", "alignment"],
          tokens: ["align", "collat"],
          surfaces: { align: "alignment", collat: "collation" },
        };
      }
      if (body === undefined) {
        return new Response("not found", { status: 404 });
      }
      return new Response(JSON.stringify(body), {
        status: 200,
        headers: { "content-type": "application/json" },
      });
    }),
  );
  return {
    calls,
    byPath: (path: string) => calls.filter((c) => c.startsWith(path)),
  };
}

export function shell(): HTMLElement {
  document.body.innerHTML = `
    <div id="app">
      <button id="palette-toggle"></button>
      <div id="error-banner" hidden></div>
      <div id="entry-points"></div>
      <div id="documents"></div>
      <div id="frequencies-s1"></div>
      <div id="frequencies-s2"></div>
    </div>`;
  return document.getElementById("app") as HTMLElement;
}

export async function settle(): Promise<void> {
  for (let i = 0; i < 8; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
