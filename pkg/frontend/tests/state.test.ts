// Selection slot behavior and superseded-fetch discarding.

import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { ViewState } from "../src/state.js";
import { mockApi, settle } from "./helpers.js";

afterEach(() => vi.unstubAllGlobals());

const SEL1 = { entryPointId: 1, tokens: ["collat", "align", "diff"] };
const SEL2 = { entryPointId: 2, tokens: ["museum", "visitor"] };

describe("ViewState slots", () => {
  it("fills s1 first, then s2, and reuses the slot on re-brush", async () => {
    mockApi();
    const state = new ViewState(new ApiClient());
    await state.brush(SEL1);
    expect(state.slot(0)?.selection.entryPointId).toBe(1);
    expect(state.slot(1)).toBeNull();
    await state.brush(SEL2);
    expect(state.slot(0)?.selection.entryPointId).toBe(1);
    expect(state.slot(1)?.selection.entryPointId).toBe(2);
    await state.brush(SEL1); // re-brush stays in s1
    expect(state.slot(0)?.selection.entryPointId).toBe(1);
    expect(state.lastBrushed).toBe(0);
  });

  it("a third distinct selection replaces s2, never s1", async () => {
    mockApi({
      "/api/documents": () => ({ documents: [], warnings: { unknown_tokens: [] } }),
      "/api/token-frequencies": () => ({ frequencies: [], warnings: { unknown_tokens: [] } }),
    });
    const state = new ViewState(new ApiClient());
    await state.brush(SEL1);
    await state.brush(SEL2);
    await state.brush({ entryPointId: 3, tokens: ["x"] });
    expect(state.slot(0)?.selection.entryPointId).toBe(1);
    expect(state.slot(1)?.selection.entryPointId).toBe(3);
  });

  it("discards responses superseded by a newer brush on the same slot", async () => {
    const resolvers: Array<() => void> = [];
    let call = 0;
    mockApi({
      "/api/documents": () => ({
        documents: [
          {
            id: `d${++call}`,
            title: "t",
            authors: [],
            year: 2020,
            venue: "v",
            collection: "S",
            match_count: 1,
            matched_tokens: ["x"],
          },
        ],
        warnings: { unknown_tokens: [] },
      }),
      "/api/token-frequencies": () =>
        new Promise((resolve) => {
          resolvers.push(() =>
            resolve({ frequencies: [], warnings: { unknown_tokens: [] } }),
          );
        }) as never,
    });
    const state = new ViewState(new ApiClient());
    const first = state.brush(SEL1);
    await settle();
    const second = state.brush(SEL1); // same slot, supersedes
    await settle();
    // release the stalled frequency fetches: older first, then newer
    resolvers[0]();
    resolvers[1]();
    await Promise.all([first, second]);
    // the slot holds the data of the second brush only
    expect(state.slot(0)?.documents?.documents[0].id).toBe("d2");
  });
});
