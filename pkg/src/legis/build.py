"""End-to-end corpus build: manifest in, graph + text store + index out."""

from __future__ import annotations

from dataclasses import dataclass

from legis.errors import EmptyText, NodeNotFound
from legis.graph.store import GraphStore
from legis.ingest.corpus import IngestStats, read_abrogations, scan_corpus
from legis.ingest.textstore import TextStore
from legis.pipeline.context import law_embedding_text
from legis.vector.embedding import EmbeddingBackend
from legis.vector.hnsw import DEFAULT_EF_CONSTRUCTION, DEFAULT_M, HnswIndex


@dataclass
class BuildResult:
    graph: GraphStore
    texts: TextStore
    index: HnswIndex
    stats: IngestStats
    abrogations_applied: int
    abrogations_skipped: int


def build_corpus(
    manifest_path: str,
    embedder: EmbeddingBackend,
    m: int = DEFAULT_M,
    ef_construction: int = DEFAULT_EF_CONSTRUCTION,
    seed: int = 0,
) -> BuildResult:
    """Ingest every document in the manifest and derive the search index.

    The emitted graph is left unfrozen so callers can keep ingesting;
    freeze before serving queries.
    """
    graph = GraphStore()
    texts = TextStore()
    scan = scan_corpus(manifest_path)
    for doc in scan:
        graph.upsert_law(doc)
        texts.add_document(doc)

    applied = skipped = 0
    for record in read_abrogations(manifest_path):
        try:
            graph.add_abrogation(record.src, record.dst, record.effective_date)
            applied += 1
        except NodeNotFound:
            skipped += 1

    index = build_index(graph, texts, embedder, m=m, ef_construction=ef_construction, seed=seed)
    return BuildResult(
        graph=graph,
        texts=texts,
        index=index,
        stats=scan.stats,
        abrogations_applied=applied,
        abrogations_skipped=skipped,
    )


def build_index(
    graph: GraphStore,
    texts: TextStore,
    embedder: EmbeddingBackend,
    m: int = DEFAULT_M,
    ef_construction: int = DEFAULT_EF_CONSTRUCTION,
    seed: int = 0,
) -> HnswIndex:
    """Embed every ingested law (title plus leading body text) into a fresh index.

    Insertion order is the sorted law id list, so the same corpus always
    produces the same structure.
    """
    index = HnswIndex(dimension=embedder.dimension, m=m, ef_construction=ef_construction, seed=seed)
    for law_id in texts.law_ids():
        if not graph.has_node(law_id) or graph.is_stub(law_id):
            continue
        try:
            vector = embedder.embed(law_embedding_text(texts.title_of(law_id), texts.text_of(law_id)))
        except EmptyText:
            continue
        index.insert(law_id, vector)
    return index
