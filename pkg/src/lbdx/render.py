"""Static exports of entry points: SVG charts and DOT graphs."""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

from .corpus import Vocabulary
from .discovery import EntryPoint
from .layout import LayoutResult

CLASS_COLORS = {"a": "red", "b": "yellow", "c": "blue"}

_MIN_FONT = 10.0
_MAX_FONT = 22.0


def _font_sizes(ep: EntryPoint, vocab: Vocabulary) -> dict[str, float]:
    freqs = {t: vocab.frequency(t) for t in ep.member_tokens}
    lo, hi = min(freqs.values()), max(freqs.values())
    if hi == lo:
        return {t: _MIN_FONT for t in freqs}
    span = _MAX_FONT - _MIN_FONT
    return {t: _MIN_FONT + span * (f - lo) / (hi - lo) for t, f in freqs.items()}


def entry_point_svg(
    ep: EntryPoint,
    layout: LayoutResult,
    vocab: Vocabulary,
    size: int = 480,
    margin: int = 48,
) -> str:
    """One entry point as a standalone SVG: MST edges, class-colored nodes,
    labels showing the most common surface form sized by token frequency."""
    inner = size - 2 * margin

    def sx(t: str) -> float:
        return margin + layout.positions[t][0] * inner

    def sy(t: str) -> float:
        return margin + (1.0 - layout.positions[t][1]) * inner

    fonts = _font_sizes(ep, vocab)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<title>entry point {ep.id}</title>',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for u, v, dist in ep.mst_edges:
        parts.append(
            f'<line x1="{sx(u):.2f}" y1="{sy(u):.2f}" x2="{sx(v):.2f}" '
            f'y2="{sy(v):.2f}" stroke="#999" stroke-width="1">'
            f"<title>{dist:.4f}</title></line>"
        )
    for t in sorted(ep.member_tokens):
        color = CLASS_COLORS[ep.classes[t]]
        x, y = sx(t), sy(t)
        parts.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="{color}" '
            'stroke="black" stroke-width="0.5"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{y - 7:.2f}" text-anchor="middle" '
            f'font-size="{fonts[t]:.1f}" font-family="sans-serif">'
            f"{escape(vocab.surface(t))}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts)


def entry_point_dot(ep: EntryPoint, vocab: Vocabulary) -> str:
    """Entry point as an undirected DOT graph for external tooling."""
    lines = [f"graph entry_point_{ep.id} {{"]
    for t in sorted(ep.member_tokens):
        label = quoteattr(vocab.surface(t))
        color = CLASS_COLORS[ep.classes[t]]
        lines.append(
            f'  "{t}" [label={label} class="{ep.classes[t]}" color="{color}"];')
    for u, v, dist in ep.mst_edges:
        lines.append(f'  "{u}" -- "{v}" [weight="{dist:.6f}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
