import sys
from importlib import resources
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from lbdx.corpus import Document, preprocess_documents
from lbdx.snapshot import PipelineConfig, build_snapshot


def sample_corpus_paths() -> tuple[str, str]:
    data = resources.files("lbdx.data")
    return (
        str(data.joinpath("sample/sample_s.jsonl")),
        str(data.joinpath("sample/sample_t.jsonl")),
    )


def make_docs(token_sets, collections=None, years=None):
    """Documents straight from token sets, skipping keyword preprocessing."""
    collections = collections or ["S"] * len(token_sets)
    years = years or [2000 + i for i in range(len(token_sets))]
    return [
        Document(
            id=f"d{i}",
            title=f"Document {i}",
            authors=[f"Author {i}"],
            year=years[i],
            venue="Test Venue",
            collection=collections[i],
            raw_keywords=sorted(ts),
            tokens=set(ts),
        )
        for i, ts in enumerate(token_sets)
    ]


@pytest.fixture(scope="session")
def sample_config():
    s_path, t_path = sample_corpus_paths()
    return PipelineConfig(s_corpus=s_path, t_corpus=t_path)


@pytest.fixture(scope="session")
def sample_snapshot(sample_config):
    return build_snapshot(sample_config)
