"""Read-only HTTP JSON API over a built snapshot.

The pipeline runs offline; this service only serves the resulting snapshot,
so every endpoint is a pure function of immutable state and arbitrarily many
concurrent readers see identical bodies.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from . import __version__
from .explore import (
    ExploreError,
    Selection,
    document_detail,
    rank_documents,
    token_frequencies,
)
from .schemas import (
    DocumentDetail,
    DocumentsResponse,
    EntryPointSummary,
    FrequenciesResponse,
    MetaResponse,
    RankedDocumentOut,
    TokenFrequency,
    Warnings,
)
from .snapshot import SessionSnapshot, entry_point_record, load_snapshot


class _State:
    """Derived read-only indexes over one snapshot."""

    def __init__(self, snapshot: SessionSnapshot):
        self.snapshot = snapshot
        self.docs_by_id = snapshot.documents_by_id()
        self.known_tokens = set(snapshot.vocabulary.entries)
        self.entry_points = [
            {
                **entry_point_record(ep, snapshot.vocabulary),
                "layout": {
                    t: list(xy)
                    for t, xy in sorted(
                        snapshot.layouts[ep.id].positions.items())
                },
            }
            for ep in sorted(snapshot.entry_points, key=lambda e: e.id)
        ]
        # validate once, then serve the frozen bytes with a content ETag
        for rec in self.entry_points:
            EntryPointSummary.model_validate(rec)
        self.entry_points_body = json.dumps(
            self.entry_points, sort_keys=True, ensure_ascii=False
        ).encode("utf-8")
        self.etag = '"' + hashlib.sha256(self.entry_points_body).hexdigest() + '"'


def _split_tokens(raw: str) -> list[str]:
    return [t for t in (part.strip() for part in raw.split(",")) if t]


def create_app(
    snapshot: SessionSnapshot | None = None,
    snapshot_dir: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the API app for one snapshot (or none: endpoints answer 503)."""
    if snapshot is None and snapshot_dir is not None:
        snapshot = load_snapshot(snapshot_dir)
    state = _State(snapshot) if snapshot is not None else None

    app = FastAPI(title="lbdx", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    def require_state() -> _State:
        if state is None:
            raise HTTPException(status_code=503, detail="no snapshot loaded")
        return state

    def parse_selection(tokens: str) -> tuple[frozenset[str], Warnings]:
        requested = _split_tokens(tokens)
        if not requested:
            raise HTTPException(status_code=422,
                                detail="selection must contain at least one token")
        st = require_state()
        known = frozenset(t for t in requested if t in st.known_tokens)
        unknown = sorted(set(requested) - known)
        return known, Warnings(unknown_tokens=unknown)

    @app.get("/api/entry-points", response_model=list[EntryPointSummary])
    def get_entry_points(request: Request):
        st = require_state()
        if request.headers.get("if-none-match") == st.etag:
            return Response(status_code=304, headers={"ETag": st.etag})
        return Response(
            content=st.entry_points_body,
            media_type="application/json",
            headers={"ETag": st.etag},
        )

    @app.get("/api/entry-points/{ep_id}", response_model=EntryPointSummary)
    def get_entry_point(ep_id: int):
        st = require_state()
        for rec in st.entry_points:
            if rec["id"] == ep_id:
                return rec
        raise HTTPException(status_code=404, detail=f"no entry point {ep_id}")

    @app.get("/api/documents", response_model=DocumentsResponse,
             response_model_exclude_none=True)
    def get_documents(
        tokens: str = Query(..., description="comma-separated selection tokens"),
        collection: str | None = Query(None, pattern="^[ST]$"),
    ):
        st = require_state()
        known, warnings = parse_selection(tokens)
        documents = []
        if known:
            for r in rank_documents(Selection(known), st.snapshot.documents):
                if collection and r.document.collection != collection:
                    continue
                documents.append(RankedDocumentOut(
                    id=r.document.id,
                    title=r.document.title,
                    authors=r.document.authors,
                    year=r.document.year,
                    venue=r.document.venue,
                    collection=r.document.collection,
                    match_count=r.match_count,
                    matched_tokens=sorted(r.matched_tokens),
                ))
        return DocumentsResponse(documents=documents, warnings=warnings)

    @app.get("/api/token-frequencies", response_model=FrequenciesResponse)
    def get_token_frequencies(
        tokens: str = Query(...),
        limit: int | None = Query(None, ge=1),
        scope: str = Query("all", pattern="^(all|selection)$"),
    ):
        st = require_state()
        known, warnings = parse_selection(tokens)
        freqs = []
        if known:
            pairs = token_frequencies(Selection(known), st.snapshot.documents,
                                      scope=scope)
            if limit is not None:
                pairs = pairs[:limit]
            freqs = [
                TokenFrequency(token=t, count=c,
                               surface=st.snapshot.vocabulary.surface(t))
                for t, c in pairs
            ]
        return FrequenciesResponse(frequencies=freqs, warnings=warnings)

    @app.get("/api/documents/{doc_id}", response_model=DocumentDetail,
             response_model_exclude_none=True)
    def get_document(doc_id: str, tokens: str | None = Query(None)):
        st = require_state()
        selection = None
        if tokens is not None:
            known, _ = parse_selection(tokens)
            selection = Selection(known) if known else None
        try:
            detail = document_detail(doc_id, st.docs_by_id, selection=selection,
                                     vocab=st.snapshot.vocabulary)
        except ExploreError:
            raise HTTPException(status_code=404,
                                detail=f"unknown document id {doc_id!r}")
        return detail

    @app.get("/api/meta", response_model=MetaResponse)
    def get_meta():
        st = require_state()
        return MetaResponse(
            config=st.snapshot.config,
            created_at=st.snapshot.created_at,
            stats=st.snapshot.stats,
            counts={
                "documents": len(st.snapshot.documents),
                "tokens": len(st.snapshot.vocabulary.entries),
                "entry_points": len(st.snapshot.entry_points),
            },
        )

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
