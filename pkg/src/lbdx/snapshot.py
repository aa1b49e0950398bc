"""Pipeline orchestration and snapshot artifacts.

A build run ingests both corpora, derives the vocabulary, embeddings and
entry points with layouts, and writes them to a snapshot directory:

    documents.jsonl    preprocessed document store
    vocabulary.json    token -> class/df/idf/surface forms
    embeddings.bin     dense vectors, lossless binary
    entry_points.json  members, classes, MST edges, anchors
    layouts.json       unit-square coordinates per entry point
    manifest.json      config echo, stats, sha256 per artifact

All data artifacts are byte-deterministic for a fixed config and input; only
the manifest carries the build timestamp.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import corpus as corpus_mod
from . import discovery as discovery_mod
from . import embedding as embedding_mod
from .corpus import Document, Vocabulary
from .discovery import DiscoveryConfig, EntryPoint
from .embedding import EmbeddingSpace
from .layout import DEFAULT_ITERATIONS, LayoutResult, layout_entry_point

log = logging.getLogger("lbdx")

ARTIFACTS = (
    "documents.jsonl",
    "vocabulary.json",
    "embeddings.bin",
    "entry_points.json",
    "layouts.json",
)


class PipelineError(RuntimeError):
    """A pipeline stage failed; carries the stage name."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage} stage failed: {cause}")
        self.stage = stage
        self.cause = cause


@dataclass
class PipelineConfig:
    s_corpus: str
    t_corpus: str
    alpha: float = 0.95
    k: int = 50
    knn: int = 4
    redundancy_eps: float = 0.01
    quality_quantile: float = 0.25
    idf_threshold: float = 1.0
    seed: int = 0
    prune_scope: str = "vocabulary"
    sigma_weight: float = 0.0
    symmetrize: bool = False
    layout_iterations: int = DEFAULT_ITERATIONS

    def __post_init__(self):
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.layout_iterations < 1:
            raise ValueError(f"layout_iterations must be >= 1")
        DiscoveryConfig(knn=self.knn, redundancy_eps=self.redundancy_eps,
                        quality_quantile=self.quality_quantile,
                        prune_scope=self.prune_scope)  # range checks

    def to_dict(self) -> dict:
        d = asdict(self)
        d["s_corpus"] = str(self.s_corpus)
        d["t_corpus"] = str(self.t_corpus)
        return d


@dataclass
class SessionSnapshot:
    """Immutable result of one pipeline run; every API response derives
    from this object alone."""

    documents: list[Document]
    vocabulary: Vocabulary
    space: EmbeddingSpace
    entry_points: list[EntryPoint]
    layouts: dict[int, LayoutResult]
    config: dict
    stats: dict = field(default_factory=dict)
    created_at: str | None = None

    def documents_by_id(self) -> dict[str, Document]:
        return {d.id: d for d in self.documents}


def _run_stage(name: str, fn, *args, **kwargs):
    log.info("stage %s", name)
    try:
        return fn(*args, **kwargs)
    except Exception as exc:
        raise PipelineError(name, exc) from exc


def _load_documents(config: PipelineConfig) -> list[Document]:
    docs_s = corpus_mod.load_corpus(config.s_corpus, "S")
    docs_t = corpus_mod.load_corpus(config.t_corpus, "T")
    docs = docs_s + docs_t
    corpus_mod.preprocess_documents(docs)
    return docs


def _embed(docs: list[Document], config: PipelineConfig) -> EmbeddingSpace:
    counts = embedding_mod.count_cooccurrences(docs)
    m = embedding_mod.sppmi_matrix(counts, config.alpha,
                                   symmetrize=config.symmetrize)
    return embedding_mod.svd_embed(m, config.k, seed=config.seed,
                                   sigma_weight=config.sigma_weight)


def _discover(space: EmbeddingSpace, vocab: Vocabulary, config: PipelineConfig):
    dconf = DiscoveryConfig(
        knn=config.knn,
        redundancy_eps=config.redundancy_eps,
        quality_quantile=config.quality_quantile,
        prune_scope=config.prune_scope,
    )
    return discovery_mod.run_discovery(space, vocab, dconf)


def _layout_all(entry_points: list[EntryPoint],
                config: PipelineConfig) -> dict[int, LayoutResult]:
    # per-entry-point seed keeps layouts independent of list order
    return {
        ep.id: layout_entry_point(ep, seed=config.seed + ep.id,
                                  iterations=config.layout_iterations)
        for ep in entry_points
    }


def build_snapshot(config: PipelineConfig) -> SessionSnapshot:
    """Run the full pipeline: corpus -> vocabulary -> embeddings ->
    discovery -> layout."""
    docs = _run_stage("corpus", _load_documents, config)
    vocab = _run_stage("vocabulary", corpus_mod.build_vocabulary,
                       docs, config.idf_threshold)
    space = _run_stage("embedding", _embed, docs, config)
    entry_points, stats = _run_stage("discovery", _discover, space, vocab, config)
    layouts = _run_stage("layout", _layout_all, entry_points, config)

    stats = dict(stats)
    stats.update(
        documents=len(docs),
        documents_s=sum(1 for d in docs if d.collection == "S"),
        documents_t=sum(1 for d in docs if d.collection == "T"),
        tokens_retained=len(vocab.entries),
        tokens_discarded_by_idf=len(vocab.discarded),
        v_a=len(vocab.v_a),
        v_b=len(vocab.v_b),
        v_c=len(vocab.v_c),
    )
    return SessionSnapshot(
        documents=docs,
        vocabulary=vocab,
        space=space,
        entry_points=entry_points,
        layouts=layouts,
        config=config.to_dict(),
        stats=stats,
        created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


def _dump_json(data, path: Path) -> None:
    path.write_text(
        json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def document_record(doc: Document) -> dict:
    return {
        "id": doc.id,
        "title": doc.title,
        "authors": doc.authors,
        "year": doc.year,
        "venue": doc.venue,
        "collection": doc.collection,
        "keywords": doc.raw_keywords,
        "tokens": sorted(doc.tokens),
    }


def entry_point_record(ep: EntryPoint, vocab: Vocabulary) -> dict:
    return {
        "id": ep.id,
        "members": [
            {
                "token": t,
                "surface": vocab.surface(t),
                "class": ep.classes[t],
                "frequency": vocab.frequency(t),
            }
            for t in sorted(ep.member_tokens)
        ],
        "mst": [{"u": u, "v": v, "distance": d} for u, v, d in ep.mst_edges],
        "anchors": list(ep.source_neighborhoods),
    }


def save_snapshot(snapshot: SessionSnapshot, out_dir: str | Path) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    lines = [json.dumps(document_record(d), sort_keys=True, ensure_ascii=False)
             for d in sorted(snapshot.documents, key=lambda d: (d.collection, d.id))]
    (out / "documents.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")

    _dump_json(snapshot.vocabulary.to_dict(), out / "vocabulary.json")

    embedding_mod.save_embeddings(
        snapshot.space, out / "embeddings.bin",
        alpha=snapshot.config["alpha"], seed=snapshot.config["seed"],
        sigma_weight=snapshot.config.get("sigma_weight", 0.0))

    _dump_json(
        [entry_point_record(ep, snapshot.vocabulary)
         for ep in snapshot.entry_points],
        out / "entry_points.json")

    _dump_json(
        {
            str(ep_id): {
                "positions": {t: [x, y]
                              for t, (x, y) in sorted(lr.positions.items())},
                "iterations_run": lr.iterations_run,
                "seed": lr.seed,
            }
            for ep_id, lr in sorted(snapshot.layouts.items())
        },
        out / "layouts.json")

    manifest = {
        "created_at": snapshot.created_at,
        "config": snapshot.config,
        "stats": snapshot.stats,
        "artifacts": {
            name: {
                "sha256": hashlib.sha256((out / name).read_bytes()).hexdigest(),
                "bytes": (out / name).stat().st_size,
            }
            for name in ARTIFACTS
        },
    }
    _dump_json(manifest, out / "manifest.json")
    return out


def load_snapshot(snapshot_dir: str | Path) -> SessionSnapshot:
    """Rehydrate a snapshot directory written by save_snapshot."""
    d = Path(snapshot_dir)
    manifest = json.loads((d / "manifest.json").read_text(encoding="utf-8"))

    documents: list[Document] = []
    for line in (d / "documents.jsonl").read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        documents.append(Document(
            id=rec["id"], title=rec["title"], authors=rec["authors"],
            year=rec["year"], venue=rec["venue"], collection=rec["collection"],
            raw_keywords=rec["keywords"], tokens=set(rec["tokens"]),
        ))

    vocab = Vocabulary.from_dict(
        json.loads((d / "vocabulary.json").read_text(encoding="utf-8")))
    space, _ = embedding_mod.load_embeddings(d / "embeddings.bin")

    entry_points = []
    for rec in json.loads((d / "entry_points.json").read_text(encoding="utf-8")):
        entry_points.append(EntryPoint(
            id=rec["id"],
            member_tokens={m["token"] for m in rec["members"]},
            source_neighborhoods=list(rec["anchors"]),
            classes={m["token"]: m["class"] for m in rec["members"]},
            mst_edges=[(e["u"], e["v"], e["distance"]) for e in rec["mst"]],
        ))

    layouts = {}
    for ep_id, rec in json.loads(
            (d / "layouts.json").read_text(encoding="utf-8")).items():
        layouts[int(ep_id)] = LayoutResult(
            positions={t: (xy[0], xy[1]) for t, xy in rec["positions"].items()},
            iterations_run=rec["iterations_run"],
            seed=rec["seed"],
        )

    return SessionSnapshot(
        documents=documents,
        vocabulary=vocab,
        space=space,
        entry_points=entry_points,
        layouts=layouts,
        config=manifest["config"],
        stats=manifest.get("stats", {}),
        created_at=manifest.get("created_at"),
    )
