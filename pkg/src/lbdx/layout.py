"""Deterministic force-directed placement of entry-point trees.

Fruchterman-Reingold-style simulation over the MST edge set: every node pair
repels with the classic k^2/d force, edges pull toward a per-edge ideal
length proportional to the edge's cosine distance (a rest-length spring,
which keeps drawn lengths ordered like the underlying distances), and a
linearly cooling temperature caps displacement. Seeded initial positions
make the result reproducible; output is normalized to the unit square with
aspect ratio preserved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .discovery import EntryPoint
from .embedding import EmbeddingSpace

DEFAULT_ITERATIONS = 300
_START_TEMPERATURE = 0.1
_MIN_SEPARATION = 1e-9
_MIN_EDGE_SCALE = 0.05  # floor on per-edge ideal length vs the base length
_SPRING_STIFFNESS = 2.0  # edge spring constant, in units of 1/k


class LayoutError(ValueError):
    """Invalid layout parameters."""


@dataclass
class LayoutResult:
    positions: dict[str, tuple[float, float]]  # within the unit square
    iterations_run: int
    seed: int


def _normalize(pos: np.ndarray) -> np.ndarray:
    """Uniformly scale into [0,1]^2 and center; preserves length ordering."""
    lo = pos.min(axis=0)
    span = pos.max(axis=0) - lo
    scale = float(span.max())
    if scale < 1e-12:
        return np.full_like(pos, 0.5)
    out = (pos - lo) / scale
    out += (1.0 - span / scale) / 2.0
    return np.clip(out, 0.0, 1.0)


def _fruchterman_reingold(
    n: int,
    edges: list[tuple[int, int, float]],
    seed: int,
    iterations: int,
) -> np.ndarray:
    rng = np.random.default_rng(seed)
    pos = rng.random((n, 2))
    # deterministic jitter so coincident starts cannot lock together
    for i in range(n):
        for j in range(i + 1, n):
            if np.linalg.norm(pos[i] - pos[j]) < _MIN_SEPARATION:
                pos[j] += (j + 1) * np.array([1e-6, 2e-6])

    k = 1.0 / np.sqrt(n)
    weights = np.array([w for _, _, w in edges], dtype=np.float64)
    mean_w = float(weights.mean()) if len(weights) else 0.0
    if mean_w > 0.0:
        ideal = np.maximum(weights / mean_w, _MIN_EDGE_SCALE) * k
    else:
        ideal = np.full(len(edges), k)

    eidx_u = np.array([u for u, _, _ in edges], dtype=np.intp)
    eidx_v = np.array([v for _, v, _ in edges], dtype=np.intp)

    for it in range(iterations):
        t = _START_TEMPERATURE * (1.0 - it / iterations)
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(delta, axis=2)
        np.fill_diagonal(dist, 1.0)
        dist = np.maximum(dist, _MIN_SEPARATION)
        # repulsion k^2 / d between all pairs
        rep = (k * k) / (dist * dist)
        np.fill_diagonal(rep, 0.0)
        disp = np.einsum("ijc,ij->ic", delta, rep)
        # attraction d^2 / k_e along edges
        if len(edges):
            edelta = pos[eidx_u] - pos[eidx_v]
            edist = np.maximum(np.linalg.norm(edelta, axis=1), _MIN_SEPARATION)
            # spring toward the per-edge rest length k_e
            stiffness = _SPRING_STIFFNESS / k
            pull = stiffness * (edist - ideal)
            force = edelta / edist[:, None] * pull[:, None]
            np.add.at(disp, eidx_u, -force)
            np.add.at(disp, eidx_v, force)
        length = np.linalg.norm(disp, axis=1)
        step = np.where(length > 0.0, np.minimum(length, t) / np.maximum(length, 1e-30), 0.0)
        pos = pos + disp * step[:, None]
    return pos


def layout_entry_point(
    ep: EntryPoint,
    seed: int = 0,
    iterations: int = DEFAULT_ITERATIONS,
    mode: str = "mst",
    space: EmbeddingSpace | None = None,
) -> LayoutResult:
    """Place an entry point's members in the unit square.

    mode="mst" (default) runs forces over the tree edges; mode="complete"
    runs attraction over the full pairwise cosine-distance graph, which
    requires the embedding space.
    """
    if iterations < 1:
        raise LayoutError(f"iterations must be >= 1, got {iterations}")
    nodes = sorted(ep.member_tokens)
    if len(nodes) == 1:
        return LayoutResult({nodes[0]: (0.5, 0.5)}, iterations, seed)
    index = {t: i for i, t in enumerate(nodes)}
    if mode == "mst":
        edges = [(index[u], index[v], w) for u, v, w in ep.mst_edges]
    elif mode == "complete":
        if space is None:
            raise LayoutError("mode='complete' requires the embedding space")
        from .embedding import cosine_distance

        edges = [
            (i, j, cosine_distance(space, nodes[i], nodes[j]))
            for i in range(len(nodes))
            for j in range(i + 1, len(nodes))
        ]
    else:
        raise LayoutError(f"unknown layout mode {mode!r}")

    pos = _fruchterman_reingold(len(nodes), edges, seed, iterations)
    pos = _normalize(pos)
    positions = {t: (float(pos[i, 0]), float(pos[i, 1])) for t, i in index.items()}
    return LayoutResult(positions, iterations, seed)
