"""Shared state handed to every pipeline run."""

from __future__ import annotations

from dataclasses import dataclass

from legis.errors import FrozenStateError
from legis.graph.store import GraphStore
from legis.ingest.textstore import TextStore
from legis.llm.gateway import LlmGateway
from legis.textmetrics.lexicons import PosLexicons
from legis.vector.embedding import EmbeddingBackend
from legis.vector.hnsw import HnswIndex

DEFAULT_K = 20

#: Characters of body text joined with the title when embedding a law.
EMBED_TEXT_LIMIT = 2048


def law_embedding_text(title: str, body: str, limit: int = EMBED_TEXT_LIMIT) -> str:
    return f"{title}\n{body[:limit]}".strip()


@dataclass
class PipelineContext:
    graph: GraphStore
    index: HnswIndex
    embedder: EmbeddingBackend
    gateway: LlmGateway
    texts: TextStore
    lexicons: PosLexicons
    default_k: int = DEFAULT_K
    locale: str = "it"

    def require_frozen(self) -> None:
        if not self.graph.frozen:
            raise FrozenStateError("pipelines run over a frozen graph; call freeze() after ingestion")
