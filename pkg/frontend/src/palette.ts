// Concept-class colors. Default follows the classic red/yellow/blue coding;
// the alternate palette is colorblind-safe (Okabe-Ito).

import type { ConceptClass } from "./types.js";

export type PaletteName = "classic" | "colorblind";

const PALETTES: Record<PaletteName, Record<ConceptClass, string>> = {
  classic: { a: "red", b: "yellow", c: "blue" },
  colorblind: { a: "#D55E00", b: "#F0E442", c: "#0072B2" },
};

let active: PaletteName = "classic";

export function classColor(cls: ConceptClass): string {
  return PALETTES[active][cls];
}

export function activePalette(): PaletteName {
  return active;
}

export function togglePalette(): PaletteName {
  active = active === "classic" ? "colorblind" : "classic";
  return active;
}

export function setPalette(name: PaletteName): void {
  active = name;
}
