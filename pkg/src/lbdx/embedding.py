"""Keyword embeddings from document-level co-occurrence.

Pipeline: count document co-occurrences -> smoothed positive PMI matrix ->
truncated SVD -> dense k-dimensional token vectors (rows of U_k).

Counting is document-level and binary: a token pair contributes one count per
document containing both tokens, and marginals are document frequencies. The
context-smoothing exponent alpha rescales the context marginal; the smoothed
distribution is renormalized to carry the same total mass as the plain
document-frequency marginal, so alpha=1 reproduces plain PPMI cell-for-cell.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import svds

from .corpus import Document

NEG_INF = float("-inf")

# below this size a dense LAPACK SVD is cheaper and more robust than ARPACK
_DENSE_SVD_MAX = 500


class EmbeddingError(ValueError):
    """Invalid parameters or tokens for embedding construction."""


@dataclass
class CooccurrenceCounts:
    """Document-level counts: #(w,c) pairs, #(w) marginals, and |D|."""

    pair_counts: dict[tuple[str, str], int]  # keys ordered (u, v) with u < v
    token_counts: dict[str, int]
    doc_count: int

    def pair_count(self, w: str, c: str) -> int:
        if w not in self.token_counts:
            raise EmbeddingError(f"unknown token: {w!r}")
        if c not in self.token_counts:
            raise EmbeddingError(f"unknown token: {c!r}")
        if w == c:
            return 0  # self-pairs are not stored
        key = (w, c) if w < c else (c, w)
        return self.pair_counts.get(key, 0)

    def tokens(self) -> list[str]:
        return sorted(self.token_counts)


def count_cooccurrences(docs: list[Document]) -> CooccurrenceCounts:
    """Count, per unordered token pair, the number of documents containing
    both tokens. Documents are sets, so duplicates within one count once."""
    if not docs:
        raise EmbeddingError("cannot count co-occurrences over an empty corpus")
    pair_counts: dict[tuple[str, str], int] = {}
    token_counts: dict[str, int] = {}
    for doc in docs:
        toks = sorted(doc.tokens)
        for t in toks:
            token_counts[t] = token_counts.get(t, 0) + 1
        for pair in combinations(toks, 2):
            pair_counts[pair] = pair_counts.get(pair, 0) + 1
    return CooccurrenceCounts(pair_counts, token_counts, len(docs))


def pmi(counts: CooccurrenceCounts, w: str, c: str) -> float:
    """Pointwise mutual information ln(#(w,c)*|D| / (#(w)*#(c))).

    Never-co-occurring pairs return -inf.
    """
    joint = counts.pair_count(w, c)
    if joint == 0:
        return NEG_INF
    return float(np.log(joint * counts.doc_count
                        / (counts.token_counts[w] * counts.token_counts[c])))


@dataclass
class SppmiMatrix:
    """Sparse smoothed positive PMI matrix over an ordered token list."""

    tokens: list[str]
    matrix: sparse.csr_matrix  # stored values > 0; zeros implicit
    alpha: float
    index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {t: i for i, t in enumerate(self.tokens)}

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def value(self, w: str, c: str) -> float:
        try:
            i, j = self.index[w], self.index[c]
        except KeyError as exc:
            raise EmbeddingError(f"unknown token: {exc.args[0]!r}") from exc
        return float(self.matrix[i, j])

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()


def sppmi_matrix(counts: CooccurrenceCounts, alpha: float = 0.95,
                 symmetrize: bool = False) -> SppmiMatrix:
    """Build the smoothed positive PMI matrix.

    cell(w,c) = max(0, ln(#(w,c) * scale / (#(w) * #(c)^alpha))) with
    scale = |D| * sum(#^alpha) / sum(#), i.e. the context marginal is smoothed
    by the exponent and rescaled to the mass of the plain marginal. At alpha=1
    the scale is exactly |D| and every cell equals plain PPMI. Cells for pairs
    that never co-occur are zero; no self-pairs exist, so the diagonal is zero.

    Smoothing only touches the context side, so the matrix is slightly
    asymmetric for alpha < 1; pass symmetrize=True to average with the
    transpose before use.
    """
    if not (0.0 < alpha <= 1.0):
        raise EmbeddingError(f"alpha must be in (0, 1], got {alpha}")
    tokens = counts.tokens()
    index = {t: i for i, t in enumerate(tokens)}
    n = len(tokens)
    counts_arr = np.array([counts.token_counts[t] for t in tokens], dtype=np.float64)
    smoothed = counts_arr ** alpha
    scale = counts.doc_count * smoothed.sum() / counts_arr.sum()

    rows: list[int] = []
    cols: list[int] = []
    data: list[float] = []
    for (u, v), joint in counts.pair_counts.items():
        i, j = index[u], index[v]
        for a, b in ((i, j), (j, i)):
            val = np.log(joint * scale / (counts_arr[a] * smoothed[b]))
            if val > 0.0:
                rows.append(a)
                cols.append(b)
                data.append(float(val))
    m = sparse.csr_matrix((data, (rows, cols)), shape=(n, n), dtype=np.float64)
    if symmetrize:
        m = (m + m.T) * 0.5
        m.eliminate_zeros()
    return SppmiMatrix(tokens, m, alpha)


@dataclass
class EmbeddingSpace:
    """Dense k-dimensional vectors per token plus retained singular values."""

    tokens: list[str]
    vectors: np.ndarray  # shape (len(tokens), k)
    k: int
    singular_values: np.ndarray  # shape (k,), descending
    index: dict[str, int] = field(init=False, repr=False)
    _units: np.ndarray | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.index = {t: i for i, t in enumerate(self.tokens)}

    def __contains__(self, token: str) -> bool:
        return token in self.index

    def vector(self, token: str) -> np.ndarray:
        try:
            return self.vectors[self.index[token]]
        except KeyError as exc:
            raise EmbeddingError(f"unknown token: {exc.args[0]!r}") from exc

    def unit_vectors(self) -> np.ndarray:
        """Row-normalized vectors; rows with zero norm raise on access via
        cosine helpers, here they are left as zeros."""
        if self._units is None:
            norms = np.linalg.norm(self.vectors, axis=1, keepdims=True)
            safe = np.where(norms == 0.0, 1.0, norms)
            self._units = self.vectors / safe
        return self._units


def _fix_signs(u: np.ndarray) -> np.ndarray:
    """Deterministic sign convention: the largest-magnitude component of each
    singular vector is made positive (ties resolved by lowest row index)."""
    for j in range(u.shape[1]):
        i = int(np.argmax(np.abs(u[:, j])))
        if u[i, j] < 0:
            u[:, j] = -u[:, j]
    return u


def svd_embed(m: SppmiMatrix, k: int = 50, seed: int = 0,
              sigma_weight: float = 0.0) -> EmbeddingSpace:
    """Truncated SVD of the SPPMI matrix; token vectors are the rows of the
    first k columns of U, optionally weighted by singular values^sigma_weight.
    """
    n = len(m.tokens)
    if not 1 <= k <= n:
        raise EmbeddingError(f"k={k} exceeds matrix dimension {n}")
    if n <= _DENSE_SVD_MAX or k >= n:
        u_full, s_full, _ = np.linalg.svd(m.to_dense(), full_matrices=False)
        u, s = u_full[:, :k], s_full[:k]
    else:
        rng = np.random.default_rng(seed)
        v0 = rng.random(min(m.shape))  # fixed start vector keeps ARPACK deterministic
        u, s, _ = svds(m.matrix, k=k, v0=v0)
        order = np.argsort(-s, kind="stable")
        u, s = u[:, order], s[order]
    u = _fix_signs(np.ascontiguousarray(u))
    vectors = u if sigma_weight == 0.0 else u * (s ** sigma_weight)
    return EmbeddingSpace(m.tokens, vectors, k, s.copy())


def cosine_similarity(space: EmbeddingSpace, w: str, c: str) -> float:
    """Cosine of the angle between two token vectors, clipped to [-1, 1]."""
    u, v = space.vector(w), space.vector(c)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0:
        raise EmbeddingError(f"token {w!r} has a zero-norm vector")
    if nv == 0.0:
        raise EmbeddingError(f"token {c!r} has a zero-norm vector")
    return float(np.clip(np.dot(u, v) / (nu * nv), -1.0, 1.0))


def cosine_distance(space: EmbeddingSpace, w: str, c: str) -> float:
    return 1.0 - cosine_similarity(space, w, c)


_MAGIC = b"LBDXEMB1\n"


def save_embeddings(space: EmbeddingSpace, path: str | Path, *,
                    alpha: float, seed: int, sigma_weight: float = 0.0) -> None:
    """Binary export: JSON header plus raw little-endian float64 payload.

    Floats round-trip losslessly and the byte stream is deterministic.
    """
    header = json.dumps({
        "tokens": space.tokens,
        "k": space.k,
        "alpha": alpha,
        "seed": seed,
        "sigma_weight": sigma_weight,
    }, sort_keys=True, ensure_ascii=False).encode("utf-8")
    vectors = np.ascontiguousarray(space.vectors, dtype="<f8")
    singular = np.ascontiguousarray(space.singular_values, dtype="<f8")
    with Path(path).open("wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<Q", len(header)))
        fh.write(header)
        fh.write(singular.tobytes())
        fh.write(vectors.tobytes())


def load_embeddings(path: str | Path) -> tuple[EmbeddingSpace, dict]:
    with Path(path).open("rb") as fh:
        magic = fh.read(len(_MAGIC))
        if magic != _MAGIC:
            raise EmbeddingError(f"not an embedding file: {path}")
        (header_len,) = struct.unpack("<Q", fh.read(8))
        header = json.loads(fh.read(header_len).decode("utf-8"))
        n, k = len(header["tokens"]), header["k"]
        singular = np.frombuffer(fh.read(8 * k), dtype="<f8").copy()
        vectors = np.frombuffer(fh.read(8 * n * k), dtype="<f8").copy().reshape(n, k)
    space = EmbeddingSpace(header["tokens"], vectors, k, singular)
    return space, header
