"""Command-line driver: build snapshots, export artifacts, run the service."""

from __future__ import annotations

import errno
import logging
import os
import shutil
import sys
from importlib import resources
from pathlib import Path

import click

from .layout import DEFAULT_ITERATIONS
from .render import entry_point_dot, entry_point_svg
from .snapshot import (
    PipelineConfig,
    PipelineError,
    build_snapshot,
    entry_point_record,
    load_snapshot,
    save_snapshot,
)

SAMPLE_FILES = ("sample_s.jsonl", "sample_t.jsonl")


def _setup_logging() -> None:
    level = os.environ.get("LBDX_LOG", "INFO").upper()
    logging.basicConfig(level=getattr(logging, level, logging.INFO),
                        format="%(levelname)s %(name)s: %(message)s")


@click.group()
def main():
    """Literature-based discovery explorer."""
    _setup_logging()


@main.command()
@click.option("--s-corpus", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Source collection (JSONL).")
@click.option("--t-corpus", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Target collection (JSONL).")
@click.option("--alpha", default=0.95, show_default=True,
              help="Context smoothing exponent.")
@click.option("--k", default=50, show_default=True,
              help="Embedding dimension.")
@click.option("--knn", default=4, show_default=True,
              help="Neighborhood size.")
@click.option("--redundancy-eps", default=0.01, show_default=True,
              help="Cosine-distance threshold for near-duplicate vectors.")
@click.option("--quality-quantile", default=0.25, show_default=True,
              help="Population quantile for the quality filter.")
@click.option("--idf-threshold", default=1.0, show_default=True,
              help="Minimum IDF for a token to be retained.")
@click.option("--seed", default=0, show_default=True)
@click.option("--prune-scope", default="vocabulary", show_default=True,
              type=click.Choice(["vocabulary", "anchors"]),
              help="Apply redundancy pruning to all tokens or anchors only.")
@click.option("--layout-iterations", default=DEFAULT_ITERATIONS, show_default=True)
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False),
              help="Snapshot output directory.")
def build(s_corpus, t_corpus, alpha, k, knn, redundancy_eps, quality_quantile,
          idf_threshold, seed, prune_scope, layout_iterations, out_dir):
    """Run the full pipeline and write a snapshot directory."""
    try:
        config = PipelineConfig(
            s_corpus=s_corpus, t_corpus=t_corpus, alpha=alpha, k=k, knn=knn,
            redundancy_eps=redundancy_eps, quality_quantile=quality_quantile,
            idf_threshold=idf_threshold, seed=seed, prune_scope=prune_scope,
            layout_iterations=layout_iterations,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))
    try:
        snapshot = build_snapshot(config)
        out = save_snapshot(snapshot, out_dir)
    except PipelineError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"snapshot written to {out} "
               f"({len(snapshot.entry_points)} entry points, "
               f"{len(snapshot.vocabulary.entries)} tokens)")


@main.command()
@click.option("--snapshot", "snapshot_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--format", "fmt", required=True,
              type=click.Choice(["json", "dot", "svg"]))
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
def export(snapshot_dir, fmt, out_dir):
    """Export one file per entry point in the requested format."""
    snap = load_snapshot(snapshot_dir)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    import json as _json

    for ep in snap.entry_points:
        path = out / f"entry_point_{ep.id:03d}.{fmt}"
        if fmt == "json":
            path.write_text(_json.dumps(entry_point_record(ep, snap.vocabulary),
                                        indent=2, sort_keys=True) + "\n",
                            encoding="utf-8")
        elif fmt == "dot":
            path.write_text(entry_point_dot(ep, snap.vocabulary), encoding="utf-8")
        else:
            path.write_text(
                entry_point_svg(ep, snap.layouts[ep.id], snap.vocabulary),
                encoding="utf-8")
    click.echo(f"wrote {len(snap.entry_points)} {fmt} files to {out}")


@main.command()
@click.option("--snapshot", "snapshot_dir", required=True,
              type=click.Path(exists=True, file_okay=False))
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--static", "static_dir", type=click.Path(file_okay=False),
              default=None, help="Optional UI bundle to serve at /.")
def serve(snapshot_dir, port, host, static_dir):
    """Serve a snapshot over the read-only JSON API."""
    import uvicorn

    from .service import create_app

    app = create_app(snapshot_dir=snapshot_dir, static_dir=static_dir)
    try:
        uvicorn.run(app, host=host, port=port,
                    log_level=os.environ.get("LBDX_LOG", "info").lower())
    except OSError as exc:
        if exc.errno == errno.EADDRINUSE:
            click.echo(f"error: port {port} is already in use", err=True)
            sys.exit(1)
        raise


@main.command()
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
def sample(out_dir):
    """Copy the bundled sample corpora into a directory."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in SAMPLE_FILES:
        src = resources.files("lbdx.data").joinpath(f"sample/{name}")
        with resources.as_file(src) as path:
            shutil.copy(path, out / name)
    click.echo(f"sample corpora written to {out}")


if __name__ == "__main__":
    main()
