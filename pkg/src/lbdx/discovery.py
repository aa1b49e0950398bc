"""Entry-point extraction.

From the embedding space: drop near-duplicate vectors, collect the k nearest
neighbors around each a-concept, keep the neighborhoods whose closest
c-concept falls under the population quantile, merge neighborhoods sharing
tokens, and span each merged group with a minimum spanning tree over cosine
distance (the degenerate pathfinder network with q = n-1, r = infinity).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .corpus import Vocabulary
from .embedding import EmbeddingSpace, EmbeddingError


class DiscoveryError(ValueError):
    """Invalid discovery parameters or inputs."""


@dataclass
class Neighborhood:
    """An anchor token with its nearest neighbors by cosine distance."""

    anchor: str
    neighbors: list[tuple[str, float]]  # ascending distance
    nearest_c_distance: float | None = None  # min distance over c-concept neighbors


@dataclass
class EntryPoint:
    """A merged group of quality neighborhoods with its spanning tree."""

    id: int
    member_tokens: set[str]
    source_neighborhoods: list[str]  # anchors, sorted
    classes: dict[str, str] = field(default_factory=dict)
    mst_edges: list[tuple[str, str, float]] = field(default_factory=list)


@dataclass
class DiscoveryConfig:
    knn: int = 4
    redundancy_eps: float = 0.01  # cosine DISTANCE; near-identical vectors
    quality_quantile: float = 0.25
    prune_scope: str = "vocabulary"  # or "anchors"

    def __post_init__(self):
        if self.knn < 1:
            raise DiscoveryError(f"knn must be >= 1, got {self.knn}")
        if not (0.0 <= self.redundancy_eps < 2.0):
            raise DiscoveryError(
                f"redundancy_eps must be in [0, 2), got {self.redundancy_eps}")
        if not (0.0 < self.quality_quantile < 1.0):
            raise DiscoveryError(
                f"quality_quantile must be in (0, 1), got {self.quality_quantile}")
        if self.prune_scope not in ("vocabulary", "anchors"):
            raise DiscoveryError(
                f"prune_scope must be 'vocabulary' or 'anchors', got {self.prune_scope!r}")


def _units_for(space: EmbeddingSpace, tokens: list[str]) -> np.ndarray:
    rows = []
    for t in tokens:
        v = space.vector(t)
        norm = np.linalg.norm(v)
        if norm == 0.0:
            raise EmbeddingError(f"token {t!r} has a zero-norm vector")
        rows.append(v / norm)
    return np.array(rows)


def prune_redundant(space: EmbeddingSpace, tokens: set[str], eps: float) -> set[str]:
    """Greedy lexicographic scan: drop a token when its cosine distance to an
    already-retained token is <= eps. Returns the retained subset."""
    if eps < 0:
        raise DiscoveryError(f"eps must be >= 0, got {eps}")
    ordered = sorted(tokens)
    units = _units_for(space, ordered)
    kept_idx: list[int] = []
    for i in range(len(ordered)):
        if kept_idx:
            dist = 1.0 - units[kept_idx] @ units[i]
            if float(dist.min()) <= eps:
                continue
        kept_idx.append(i)
    return {ordered[i] for i in kept_idx}


def extract_neighborhoods(
    space: EmbeddingSpace,
    anchors: set[str],
    knn: int = 4,
    c_tokens: frozenset[str] | set[str] = frozenset(),
    candidates: set[str] | None = None,
) -> list[Neighborhood]:
    """For each anchor, the knn nearest candidate tokens by cosine distance
    (anchor excluded, ties broken lexicographically). Candidates default to
    every token in the space; c_tokens marks which neighbors are c-concepts
    so the nearest-c distance can be recorded."""
    pool = sorted(candidates if candidates is not None else space.tokens)
    if len(pool) < knn + 1:
        raise DiscoveryError(
            f"vocabulary of size {len(pool)} is smaller than knn+1 = {knn + 1}")
    unknown = anchors - set(space.tokens)
    if unknown:
        raise EmbeddingError(f"unknown token: {sorted(unknown)[0]!r}")
    pool_units = _units_for(space, pool)
    out: list[Neighborhood] = []
    for anchor in sorted(anchors):
        v = space.vector(anchor)
        norm = np.linalg.norm(v)
        if norm == 0.0:
            raise EmbeddingError(f"token {anchor!r} has a zero-norm vector")
        dists = np.maximum(1.0 - pool_units @ (v / norm), 0.0)
        ranked = sorted(
            ((float(d), t) for t, d in zip(pool, dists) if t != anchor))
        neighbors = [(t, d) for d, t in ranked[:knn]]
        c_dists = [d for t, d in neighbors if t in c_tokens]
        out.append(Neighborhood(
            anchor=anchor,
            neighbors=neighbors,
            nearest_c_distance=min(c_dists) if c_dists else None,
        ))
    return out


def quality_filter(
    neighborhoods: list[Neighborhood],
    quantile: float = 0.25,
    population: str = "nearest_c",
) -> list[Neighborhood]:
    """Keep neighborhoods that (1) contain at least one c-concept and
    (2) whose nearest-c distance is at or below the population quantile.

    The threshold population is, by default, the nearest-c distances of the
    neighborhoods passing criterion 1; population="nearest_any" instead uses
    every neighborhood's overall nearest-neighbor distance.
    """
    if population not in ("nearest_c", "nearest_any"):
        raise DiscoveryError(f"unknown population {population!r}")
    passing = [n for n in neighborhoods if n.nearest_c_distance is not None]
    if not passing:
        return []
    if population == "nearest_c":
        values = [n.nearest_c_distance for n in passing]
    else:
        values = [n.neighbors[0][1] for n in neighborhoods if n.neighbors]
    threshold = float(np.quantile(values, quantile, method="linear"))
    return [n for n in passing if n.nearest_c_distance <= threshold]


class _UnionFind:
    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, x: str) -> str:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller root wins so grouping is order-independent
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def merge_neighborhoods(neighborhoods: list[Neighborhood]) -> list[EntryPoint]:
    """Merge neighborhoods transitively over shared tokens (anchor or
    neighbor); each group becomes one entry point. Entry points are ordered
    and numbered by their smallest member token."""
    uf = _UnionFind()
    token_sets: list[set[str]] = []
    for n in neighborhoods:
        toks = {n.anchor} | {t for t, _ in n.neighbors}
        token_sets.append(toks)
        first = min(toks)
        for t in toks:
            uf.union(first, t)

    groups: dict[str, dict] = {}
    for n, toks in zip(neighborhoods, token_sets):
        root = uf.find(n.anchor)
        g = groups.setdefault(root, {"members": set(), "anchors": []})
        g["members"] |= toks
        g["anchors"].append(n.anchor)

    ordered = sorted(groups.values(), key=lambda g: min(g["members"]))
    return [
        EntryPoint(
            id=i,
            member_tokens=set(g["members"]),
            source_neighborhoods=sorted(set(g["anchors"])),
        )
        for i, g in enumerate(ordered, start=1)
    ]


def build_mst(space: EmbeddingSpace, members: set[str]) -> list[tuple[str, str, float]]:
    """Kruskal MST of the complete cosine-distance graph over the members.

    Ties broken by lexicographic edge endpoints; singletons give no edges.
    Edges are returned sorted by endpoints.
    """
    if not members:
        raise DiscoveryError("cannot build an MST over an empty member set")
    nodes = sorted(members)
    units = _units_for(space, nodes)  # raises on unknown/zero-norm members
    if len(nodes) == 1:
        return []
    sims = units @ units.T
    edges = [
        (max(1.0 - float(sims[i, j]), 0.0), nodes[i], nodes[j])
        for i in range(len(nodes))
        for j in range(i + 1, len(nodes))
    ]
    edges.sort()
    uf = _UnionFind()
    tree: list[tuple[str, str, float]] = []
    for d, u, v in edges:
        if uf.find(u) != uf.find(v):
            uf.union(u, v)
            tree.append((u, v, d))
            if len(tree) == len(nodes) - 1:
                break
    return sorted(tree, key=lambda e: (e[0], e[1]))


def classify_members(vocab: Vocabulary, members: set[str]) -> dict[str, str]:
    """Look up each member's concept class from the vocabulary partition."""
    return {t: vocab.token_class(t) for t in sorted(members)}


def run_discovery(
    space: EmbeddingSpace,
    vocab: Vocabulary,
    config: DiscoveryConfig | None = None,
) -> tuple[list[EntryPoint], dict]:
    """Full extraction: prune, extract, filter, merge, classify, span.

    Returns the entry points plus a stats dict for the build manifest.
    """
    config = config or DiscoveryConfig()
    all_tokens = set(space.tokens)
    if config.prune_scope == "vocabulary":
        retained = prune_redundant(space, all_tokens, config.redundancy_eps)
        anchors = retained & vocab.v_a
        candidates = retained
    else:
        anchors = prune_redundant(space, all_tokens & vocab.v_a, config.redundancy_eps)
        candidates = all_tokens
    neighborhoods = extract_neighborhoods(
        space, anchors, config.knn, c_tokens=vocab.v_c, candidates=candidates)
    quality = quality_filter(neighborhoods, config.quality_quantile)
    entry_points = merge_neighborhoods(quality)
    for ep in entry_points:
        ep.classes = classify_members(vocab, ep.member_tokens)
        ep.mst_edges = build_mst(space, ep.member_tokens)
    stats = {
        "tokens_total": len(all_tokens),
        "tokens_pruned": len(all_tokens) - len(candidates)
        if config.prune_scope == "vocabulary"
        else len(all_tokens & vocab.v_a) - len(anchors),
        "anchors": len(anchors),
        "neighborhoods_with_c": sum(
            1 for n in neighborhoods if n.nearest_c_distance is not None),
        "quality_neighborhoods": len(quality),
        "entry_points": len(entry_points),
    }
    return entry_points, stats
