// View 1.a: small-multiple panels, one per entry point. Nodes are drawn at
// the server-provided layout coordinates; this view never re-layouts.

import { classColor } from "../palette.js";
import type { EntryPoint } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const PANEL = 220;
const PAD = 26;
const MIN_FONT = 9;
const MAX_FONT = 16;

function fontSizes(ep: EntryPoint): Map<string, number> {
  const freqs = ep.members.map((m) => m.frequency);
  const lo = Math.min(...freqs);
  const hi = Math.max(...freqs);
  const sizes = new Map<string, number>();
  for (const m of ep.members) {
    const t = hi === lo ? 0 : (m.frequency - lo) / (hi - lo);
    sizes.set(m.token, MIN_FONT + t * (MAX_FONT - MIN_FONT));
  }
  return sizes;
}

export function renderEntryPointPanel(
  ep: EntryPoint,
  onBrush: (ep: EntryPoint) => void,
): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "entry-point-panel";
  panel.dataset.entryPointId = String(ep.id);

  const header = document.createElement("div");
  header.className = "panel-header";
  header.textContent = `Entry point ${ep.id}`;
  panel.appendChild(header);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${PANEL} ${PANEL}`);
  svg.setAttribute("width", String(PANEL));
  svg.setAttribute("height", String(PANEL));

  const px = (t: string) => PAD + ep.layout[t][0] * (PANEL - 2 * PAD);
  const py = (t: string) => PAD + (1 - ep.layout[t][1]) * (PANEL - 2 * PAD);

  for (const edge of ep.mst) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", px(edge.u).toFixed(1));
    line.setAttribute("y1", py(edge.u).toFixed(1));
    line.setAttribute("x2", px(edge.v).toFixed(1));
    line.setAttribute("y2", py(edge.v).toFixed(1));
    line.setAttribute("class", "mst-edge");
    svg.appendChild(line);
  }

  const sizes = fontSizes(ep);
  for (const member of ep.members) {
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", px(member.token).toFixed(1));
    circle.setAttribute("cy", py(member.token).toFixed(1));
    circle.setAttribute("r", "4");
    circle.setAttribute("fill", classColor(member.class));
    circle.setAttribute("class", `node node-${member.class}`);
    circle.dataset.token = member.token;
    svg.appendChild(circle);

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", px(member.token).toFixed(1));
    label.setAttribute("y", (py(member.token) - 6).toFixed(1));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("font-size", sizes.get(member.token)!.toFixed(1));
    label.setAttribute("class", "node-label");
    label.textContent = member.surface;
    svg.appendChild(label);
  }

  panel.appendChild(svg);
  panel.addEventListener("click", () => onBrush(ep));
  return panel;
}

export function renderEntryPoints(
  container: HTMLElement,
  entryPoints: EntryPoint[],
  onBrush: (ep: EntryPoint) => void,
): void {
  container.replaceChildren();
  if (entryPoints.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No entry points in this snapshot.";
    container.appendChild(empty);
    return;
  }
  for (const ep of entryPoints) {
    container.appendChild(renderEntryPointPanel(ep, onBrush));
  }
}

export function markBrushed(container: HTMLElement, brushedIds: number[]): void {
  for (const panel of container.querySelectorAll<HTMLElement>(".entry-point-panel")) {
    const id = Number(panel.dataset.entryPointId);
    panel.classList.toggle("brushed", brushedIds.includes(id));
  }
}
