"""Command-line client over the core package.

Machine-readable output goes to stdout, diagnostics to stderr. Exit codes:
0 success, 1 validation problem (bad request, unknown law), 2 broken input
files (missing manifest, corrupt snapshot).
"""

from __future__ import annotations

import functools
import json
import sys
from dataclasses import asdict
from datetime import date

import click

from legis.build import build_corpus
from legis.errors import IoError, LegisError
from legis.graph.snapshot import load_snapshot, save_snapshot
from legis.ingest.textstore import TextStore, default_texts_path
from legis.llm.gateway import GatewayConfig, LlmGateway, MODE_MOCK
from legis.monitor.export import export_dataset
from legis.monitor.timeseries import timeseries
from legis.pipeline.context import PipelineContext
from legis.pipeline.landscape import landscape
from legis.service.state import AppState, ServiceConfig
from legis.textmetrics.lexicons import PosLexicons
from legis.textmetrics.metrics import profile
from legis.vector.embedding import CallableEmbedder, MockEmbedder
from legis.vector.hnsw import HnswIndex


def _emit(payload: dict) -> None:
    click.echo(json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":")))


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except IoError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except (LegisError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _make_embedder(config: GatewayConfig):
    if config.mode == MODE_MOCK:
        return MockEmbedder(config.embed_dimension)
    return CallableEmbedder(LlmGateway(config).embed, config.embed_dimension)


@click.group()
def main() -> None:
    """Legislative corpus analytics."""


@main.command()
@click.option("--manifest", "manifest_path", required=True, type=click.Path())
@click.option("--snapshot", "snapshot_path", required=True, type=click.Path())
@click.option("--index", "index_path", type=click.Path(), default=None)
@click.option("--seed", type=int, default=0, show_default=True, help="Index level-generation seed.")
@_handle_errors
def ingest(manifest_path: str, snapshot_path: str, index_path: str | None, seed: int) -> None:
    """Build the graph snapshot (plus text store and index) from a manifest."""
    config = GatewayConfig.from_env()
    result = build_corpus(manifest_path, _make_embedder(config), seed=seed)
    save_snapshot(result.graph, snapshot_path)
    result.texts.save(default_texts_path(snapshot_path))
    if index_path:
        result.index.save(index_path)
    _emit(
        {
            **result.stats.as_dict(),
            "laws": len(result.graph.laws()),
            "nodes": result.graph.node_count(),
            "edges": result.graph.edge_count(),
            "abrogations_applied": result.abrogations_applied,
            "abrogations_skipped": result.abrogations_skipped,
            "indexed": len(result.index),
        }
    )


@main.command()
@click.option("--snapshot", "snapshot_path", required=True, type=click.Path())
@click.option("--law", "law_id", required=True)
@_handle_errors
def metrics(snapshot_path: str, law_id: str) -> None:
    """Readability profile of one ingested law."""
    graph = load_snapshot(snapshot_path)
    texts_path = default_texts_path(snapshot_path)
    texts = TextStore.load(texts_path)
    node = graph.node(law_id)
    if node.properties.get("stub") or law_id not in texts:
        raise LegisError(f"no text available for {law_id}")
    lexicons = PosLexicons.italian_defaults()
    _emit({"law_id": law_id, "profile": profile(texts.text_of(law_id), lexicons).to_dict()})


@main.command(name="landscape")
@click.option("--snapshot", "snapshot_path", required=True, type=click.Path())
@click.option("--index", "index_path", required=True, type=click.Path())
@click.option("--input", "input_text", required=True)
@click.option("--k", type=int, default=None)
@click.option("--as-of", "as_of", type=click.DateTime(formats=["%Y-%m-%d"]), default=None)
@_handle_errors
def landscape_cmd(
    snapshot_path: str, index_path: str, input_text: str, k: int | None, as_of
) -> None:
    """Normative landscape for a proposed law title or keywords."""
    graph = load_snapshot(snapshot_path)
    graph.freeze()
    index = HnswIndex.load(index_path)
    config = GatewayConfig.from_env()
    ctx = PipelineContext(
        graph=graph,
        index=index,
        embedder=_make_embedder(config),
        gateway=LlmGateway(config),
        texts=TextStore(),
        lexicons=PosLexicons.italian_defaults(),
    )
    result = landscape(ctx, input_text, as_of=as_of.date() if as_of else None, k=k)
    _emit(
        {
            "input_text": result.input_text,
            "as_of": result.as_of.isoformat(),
            "topics": {
                "seed_topics": result.topics.seed_topics,
                "expanded_topics": result.topics.expanded_topics,
                "expansion_failed": result.topics.expansion_failed,
            },
            "relevant_laws": [asdict(e) for e in result.relevant_laws.entries],
            "foundations": [asdict(f) for f in result.foundations],
        }
    )


@main.command()
@click.option("--snapshot", "snapshot_path", required=True, type=click.Path())
@click.option("--metric", required=True)
@click.option("--granularity", default="year", show_default=True)
@click.option("--from", "from_str", required=True)
@click.option("--to", "to_str", required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@_handle_errors
def monitor(snapshot_path: str, metric: str, granularity: str, from_str: str, to_str: str, fmt: str) -> None:
    """Time series over the legislative system."""
    graph = load_snapshot(snapshot_path)
    graph.freeze()
    series = timeseries(graph, metric, granularity, date.fromisoformat(from_str), date.fromisoformat(to_str))
    sys.stdout.buffer.write(export_dataset(series, fmt))
    sys.stdout.buffer.flush()


@main.command()
@click.option("--snapshot", "snapshot_path", required=True, type=click.Path())
@click.option("--index", "index_path", type=click.Path(), default=None)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--cors-origin", "cors_origins", multiple=True)
@_handle_errors
def serve(snapshot_path: str, index_path: str | None, port: int, host: str, cors_origins) -> None:
    """Run the HTTP service over a frozen snapshot."""
    import uvicorn

    from legis.service.app import create_app

    config = ServiceConfig(
        snapshot_path=snapshot_path,
        index_path=index_path,
        port=port,
        cors_origins=list(cors_origins),
    )
    state = AppState.load(config)
    state.cors_origins = list(cors_origins)
    app = create_app(state)
    uvicorn.run(app, host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
