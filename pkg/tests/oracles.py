"""Independent brute-force oracles used to pin expected values.

Everything here recomputes results from first principles (document scans,
Prufer-sequence tree enumeration, minimax path relaxation, dense
eigendecomposition) so the implementations under test are checked against a
second, unrelated route.
"""

from __future__ import annotations

import heapq
import itertools
import math

import numpy as np


def brute_pmi(doc_sets: list[set[str]], w: str, c: str) -> float:
    """PMI from raw document scans: ln(#(w,c)|D| / (#(w)#(c)))."""
    d = len(doc_sets)
    nw = sum(1 for s in doc_sets if w in s)
    nc = sum(1 for s in doc_sets if c in s)
    joint = 0 if w == c else sum(1 for s in doc_sets if w in s and c in s)
    if joint == 0:
        return float("-inf")
    return math.log(joint * d / (nw * nc))


def brute_sppmi(doc_sets: list[set[str]], w: str, c: str, alpha: float) -> float:
    """Smoothed positive PMI cell from raw document scans.

    Context marginal #(c)^alpha renormalized to the plain marginal's mass, so
    alpha=1 reduces to plain PPMI.
    """
    d = len(doc_sets)
    if w == c:
        return 0.0
    nw = sum(1 for s in doc_sets if w in s)
    nc = sum(1 for s in doc_sets if c in s)
    joint = sum(1 for s in doc_sets if w in s and c in s)
    if joint == 0:
        return 0.0
    tokens = {t for s in doc_sets for t in s}
    dfs = [sum(1 for s in doc_sets if t in s) for t in tokens]
    scale = d * sum(f ** alpha for f in dfs) / sum(dfs)
    return max(0.0, math.log(joint * scale / (nw * nc ** alpha)))


def singular_values_by_eigh(dense: np.ndarray) -> np.ndarray:
    """Singular values via the eigendecomposition of M^T M, descending."""
    eigvals = np.linalg.eigvalsh(dense.T @ dense)
    return np.sqrt(np.clip(eigvals, 0.0, None))[::-1]


def _prufer_to_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def exhaustive_mst_weight(weight: np.ndarray) -> float:
    """Minimum spanning-tree weight by enumerating every labeled tree
    (Prufer sequences); complete graphs up to n=7 stay tractable."""
    n = len(weight)
    if n == 1:
        return 0.0
    if n == 2:
        return float(weight[0][1])
    best = math.inf
    for seq in itertools.product(range(n), repeat=n - 2):
        total = sum(weight[u][v] for u, v in _prufer_to_edges(seq, n))
        if total < best:
            best = total
    return float(best)


def pathfinder_edges(weight: np.ndarray) -> set[tuple[int, int]]:
    """Pathfinder network for q = n-1, r = infinity by minimax relaxation:
    an edge survives unless some other path has a strictly smaller maximum
    edge weight."""
    n = len(weight)
    d = np.array(weight, dtype=float)
    for k in range(n):
        d = np.minimum(d, np.maximum(d[:, k][:, None], d[k, :][None, :]))
    return {
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if not d[i][j] < weight[i][j]
    }
