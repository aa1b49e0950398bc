"""Corpus ingestion and vocabulary construction.

Reads the two paper collections from JSONL, turns author keywords into
stemmed tokens, filters low-information tokens by IDF, and partitions the
surviving vocabulary into a/b/c concept sets by collection occurrence
(a: target-only, c: source-only, b: both).
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .porter import stem

TOKEN_RE = re.compile(r"[a-z0-9]+")

COLLECTIONS = ("S", "T")

_REQUIRED_FIELDS = (
    ("id", str),
    ("title", str),
    ("authors", list),
    ("year", int),
    ("venue", str),
    ("keywords", list),
)


class CorpusError(ValueError):
    """Malformed corpus file or inconsistent document set."""


def _load_data_lines(name: str) -> list[str]:
    text = resources.files("lbdx.data").joinpath(name).read_text(encoding="utf-8")
    return [ln for ln in (line.strip() for line in text.splitlines())
            if ln and not ln.startswith("#")]


def load_stop_words() -> frozenset[str]:
    return frozenset(_load_data_lines("stopwords.txt"))


def load_spelling_map() -> dict[str, str]:
    mapping = {}
    for line in _load_data_lines("american_spellings.tsv"):
        british, american = line.split("\t")
        mapping[british] = american
    return mapping


_STOP_WORDS: frozenset[str] | None = None
_SPELLINGS: dict[str, str] | None = None


def _default_stop_words() -> frozenset[str]:
    global _STOP_WORDS
    if _STOP_WORDS is None:
        _STOP_WORDS = load_stop_words()
    return _STOP_WORDS


def _default_spellings() -> dict[str, str]:
    global _SPELLINGS
    if _SPELLINGS is None:
        _SPELLINGS = load_spelling_map()
    return _SPELLINGS


@dataclass
class Document:
    """One research paper with its metadata and bag of keyword tokens."""

    id: str
    title: str
    authors: list[str]
    year: int
    venue: str
    collection: str  # "S" or "T"
    raw_keywords: list[str]
    tokens: set[str] = field(default_factory=set)


@dataclass
class TokenStats:
    """Per-stem statistics: document frequency and surface spellings."""

    stem: str
    surface_forms: dict[str, int] = field(default_factory=dict)
    total_count: int = 0  # number of documents containing the stem
    idf: float = 0.0

    @property
    def most_common_form(self) -> str:
        # ties broken lexicographically so displays are deterministic
        best = max(self.surface_forms.values())
        return min(s for s, c in self.surface_forms.items() if c == best)


@dataclass
class Vocabulary:
    """Retained stems partitioned into the three disjoint concept sets."""

    entries: dict[str, TokenStats]
    v_a: set[str]
    v_b: set[str]
    v_c: set[str]
    doc_count: int
    discarded: dict[str, float] = field(default_factory=dict)

    def token_class(self, token: str) -> str:
        if token in self.v_a:
            return "a"
        if token in self.v_b:
            return "b"
        if token in self.v_c:
            return "c"
        raise KeyError(f"unknown token: {token!r}")

    def surface(self, token: str) -> str:
        entry = self.entries.get(token)
        return entry.most_common_form if entry and entry.surface_forms else token

    def frequency(self, token: str) -> int:
        return self.entries[token].total_count

    def to_dict(self) -> dict:
        return {
            "doc_count": self.doc_count,
            "discarded": {t: self.discarded[t] for t in sorted(self.discarded)},
            "tokens": [
                {
                    "token": t,
                    "class": self.token_class(t),
                    "df": st.total_count,
                    "idf": st.idf,
                    "surface_forms": {s: st.surface_forms[s]
                                      for s in sorted(st.surface_forms)},
                }
                for t, st in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Vocabulary":
        entries: dict[str, TokenStats] = {}
        v_a: set[str] = set()
        v_b: set[str] = set()
        v_c: set[str] = set()
        for rec in data["tokens"]:
            t = rec["token"]
            entries[t] = TokenStats(
                stem=t,
                surface_forms=dict(rec["surface_forms"]),
                total_count=rec["df"],
                idf=rec["idf"],
            )
            {"a": v_a, "b": v_b, "c": v_c}[rec["class"]].add(t)
        return cls(entries, v_a, v_b, v_c, data["doc_count"],
                   dict(data.get("discarded", {})))


def load_corpus(path: str | Path, collection: str) -> list[Document]:
    """Load one collection from a JSONL file, one paper object per line."""
    if collection not in COLLECTIONS:
        raise CorpusError(f"collection must be one of {COLLECTIONS}, got {collection!r}")
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"corpus file not found: {path}")

    docs: list[Document] = []
    seen: dict[str, int] = {}
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}:{lineno}: invalid JSON: {exc.msg}") from exc
            if not isinstance(record, dict):
                raise CorpusError(f"{path}:{lineno}: expected a JSON object")
            for name, typ in _REQUIRED_FIELDS:
                if name not in record:
                    raise CorpusError(f"{path}:{lineno}: missing field {name!r}")
                if not isinstance(record[name], typ) or isinstance(record[name], bool):
                    raise CorpusError(
                        f"{path}:{lineno}: field {name!r} must be {typ.__name__}")
            for name in ("authors", "keywords"):
                if not all(isinstance(x, str) for x in record[name]):
                    raise CorpusError(
                        f"{path}:{lineno}: field {name!r} must contain only strings")
            doc_id = record["id"]
            if doc_id in seen:
                raise CorpusError(
                    f"{path}:{lineno}: duplicate id {doc_id!r} "
                    f"(first seen on line {seen[doc_id]})")
            seen[doc_id] = lineno
            docs.append(Document(
                id=doc_id,
                title=record["title"],
                authors=list(record["authors"]),
                year=record["year"],
                venue=record["venue"],
                collection=collection,
                raw_keywords=list(record["keywords"]),
            ))
    return docs


def normalize_keywords(
    raw_keywords: list[str],
    stop_words: frozenset[str] | None = None,
    spelling_map: dict[str, str] | None = None,
) -> list[str]:
    """Split keyword phrases into lowercase tokens, map British spellings to
    American, and drop stop words. Order is preserved; no stemming here."""
    if stop_words is None:
        stop_words = _default_stop_words()
    if spelling_map is None:
        spelling_map = _default_spellings()
    out: list[str] = []
    for phrase in raw_keywords:
        for token in TOKEN_RE.findall(phrase.lower()):
            token = spelling_map.get(token, token)
            if token not in stop_words:
                out.append(token)
    return out


def preprocess_documents(docs: list[Document]) -> list[Document]:
    """Populate each document's token set with stemmed normalized keywords."""
    for doc in docs:
        doc.tokens = {stem(t) for t in normalize_keywords(doc.raw_keywords)}
    return docs


def build_vocabulary(docs: list[Document], idf_threshold: float = 1.0) -> Vocabulary:
    """Build the a/b/c-partitioned vocabulary over preprocessed documents.

    idf(t) = ln(|D| / df(t)). Tokens with idf below the threshold are removed
    from the vocabulary and from every document's token set.
    """
    if not docs:
        raise CorpusError("cannot build a vocabulary from an empty document list")
    seen_ids: dict[str, str] = {}
    for doc in docs:
        if doc.id in seen_ids:
            raise CorpusError(
                f"duplicate id {doc.id!r} (collections "
                f"{seen_ids[doc.id]} and {doc.collection})")
        seen_ids[doc.id] = doc.collection

    doc_count = len(docs)
    df: Counter[str] = Counter()
    in_s: set[str] = set()
    in_t: set[str] = set()
    surfaces: dict[str, Counter[str]] = {}
    for doc in docs:
        df.update(doc.tokens)
        (in_s if doc.collection == "S" else in_t).update(doc.tokens)
        # one count per (document, surface) pair, matching set semantics
        for surface in set(normalize_keywords(doc.raw_keywords)):
            surfaces.setdefault(stem(surface), Counter())[surface] += 1

    discarded: dict[str, float] = {}
    entries: dict[str, TokenStats] = {}
    for token in sorted(df):
        idf = math.log(doc_count / df[token])
        if idf < idf_threshold:
            discarded[token] = idf
            continue
        entries[token] = TokenStats(
            stem=token,
            surface_forms=dict(surfaces.get(token, {})),
            total_count=df[token],
            idf=idf,
        )

    if discarded:
        for doc in docs:
            doc.tokens -= discarded.keys()

    retained = entries.keys()
    v_a = {t for t in retained if t in in_t and t not in in_s}
    v_c = {t for t in retained if t in in_s and t not in in_t}
    v_b = {t for t in retained if t in in_s and t in in_t}
    return Vocabulary(entries, v_a, v_b, v_c, doc_count, discarded)
