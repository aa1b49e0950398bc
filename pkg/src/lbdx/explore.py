"""Selection-driven document ranking and token frequency summaries."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import Document, Vocabulary


class ExploreError(ValueError):
    """Invalid selection or unknown document."""


@dataclass(frozen=True)
class Selection:
    """A set of tokens driving the linked views, usually one entry point."""

    tokens: frozenset[str]
    origin: int | None = None  # entry-point id, when applicable


@dataclass
class RankedDocument:
    document: Document
    match_count: int
    matched_tokens: set[str]


def rank_documents(selection: Selection, docs: list[Document]) -> list[RankedDocument]:
    """Documents sharing at least one token with the selection, ordered by
    match count descending, then year descending, then id ascending."""
    if not selection.tokens:
        raise ExploreError("selection is empty")
    ranked = []
    for doc in docs:
        matched = selection.tokens & doc.tokens
        if matched:
            ranked.append(RankedDocument(doc, len(matched), set(matched)))
    ranked.sort(key=lambda r: (-r.match_count, -r.document.year, r.document.id))
    return ranked


def token_frequencies(
    selection: Selection,
    docs: list[Document],
    scope: str = "all",
) -> list[tuple[str, int]]:
    """Rank-frequency list over the documents matched by the selection.

    scope="all" counts every token of the matched documents (how many matched
    documents contain it); scope="selection" counts selection tokens only.
    Sorted by count descending, then token ascending.
    """
    if scope not in ("all", "selection"):
        raise ExploreError(f"unknown scope {scope!r}")
    counts: Counter[str] = Counter()
    for ranked in rank_documents(selection, docs):
        toks = ranked.document.tokens
        if scope == "selection":
            toks = toks & selection.tokens
        counts.update(toks)
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))


def document_detail(
    doc_id: str,
    docs: list[Document] | dict[str, Document],
    selection: Selection | None = None,
    vocab: Vocabulary | None = None,
) -> dict:
    """Full metadata for one document, plus match information against an
    optional selection and display surface forms when a vocabulary is given."""
    by_id = docs if isinstance(docs, dict) else {d.id: d for d in docs}
    doc = by_id.get(doc_id)
    if doc is None:
        raise ExploreError(f"unknown document id: {doc_id!r}")
    detail = {
        "id": doc.id,
        "title": doc.title,
        "authors": list(doc.authors),
        "year": doc.year,
        "venue": doc.venue,
        "collection": doc.collection,
        "raw_keywords": list(doc.raw_keywords),
        "tokens": sorted(doc.tokens),
    }
    if vocab is not None:
        detail["surfaces"] = {t: vocab.surface(t) for t in sorted(doc.tokens)}
    if selection is not None:
        matched = selection.tokens & doc.tokens
        detail["match_count"] = len(matched)
        detail["matched_tokens"] = sorted(matched)
    return detail
