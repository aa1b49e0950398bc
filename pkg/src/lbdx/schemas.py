"""Pydantic response models for the HTTP API.

Running ``python -m lbdx.schemas [outdir]`` regenerates the published JSON
schema files checked into ``schemas/``; the test suite validates live
responses against those files.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, TypeAdapter


class Member(BaseModel):
    token: str
    surface: str
    cls: Literal["a", "b", "c"] = Field(alias="class")
    frequency: int

    model_config = {"populate_by_name": True}


class MstEdge(BaseModel):
    u: str
    v: str
    distance: float


class EntryPointSummary(BaseModel):
    id: int
    members: list[Member]
    mst: list[MstEdge]
    anchors: list[str]
    layout: dict[str, tuple[float, float]]


class Warnings(BaseModel):
    unknown_tokens: list[str] = []


class RankedDocumentOut(BaseModel):
    id: str
    title: str
    authors: list[str]
    year: int
    venue: str
    collection: Literal["S", "T"]
    match_count: int
    matched_tokens: list[str]


class DocumentsResponse(BaseModel):
    documents: list[RankedDocumentOut]
    warnings: Warnings = Warnings()


class TokenFrequency(BaseModel):
    token: str
    surface: str
    count: int


class FrequenciesResponse(BaseModel):
    frequencies: list[TokenFrequency]
    warnings: Warnings = Warnings()


class DocumentDetail(BaseModel):
    id: str
    title: str
    authors: list[str]
    year: int
    venue: str
    collection: Literal["S", "T"]
    raw_keywords: list[str]
    tokens: list[str]
    surfaces: dict[str, str]
    match_count: Optional[int] = None
    matched_tokens: Optional[list[str]] = None


class MetaResponse(BaseModel):
    config: dict
    created_at: Optional[str]
    stats: dict
    counts: dict[str, int]


ENTRY_POINTS_ADAPTER = TypeAdapter(list[EntryPointSummary])

PUBLISHED_SCHEMAS = {
    "entry_points.schema.json": lambda: ENTRY_POINTS_ADAPTER.json_schema(),
    "entry_point.schema.json": lambda: EntryPointSummary.model_json_schema(),
    "documents.schema.json": lambda: DocumentsResponse.model_json_schema(),
    "token_frequencies.schema.json": lambda: FrequenciesResponse.model_json_schema(),
    "document_detail.schema.json": lambda: DocumentDetail.model_json_schema(),
    "meta.schema.json": lambda: MetaResponse.model_json_schema(),
}


def write_schemas(out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, build in PUBLISHED_SCHEMAS.items():
        path = out / name
        path.write_text(json.dumps(build(), indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
        written.append(path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "schemas"
    for p in write_schemas(target):
        print(p)
