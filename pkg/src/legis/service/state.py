"""Service configuration and the shared read-only state behind all handlers."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from legis.build import build_index
from legis.errors import EmptyText, IoError, NodeNotFound
from legis.graph.snapshot import load_snapshot
from legis.graph.store import GraphStore
from legis.ingest.textstore import TextStore, default_texts_path
from legis.llm.gateway import GatewayConfig, LlmGateway, MODE_MOCK
from legis.pipeline.context import DEFAULT_K, PipelineContext
from legis.textmetrics.lexicons import PosLexicons
from legis.textmetrics.metrics import ReadabilityProfile, profile
from legis.vector.embedding import CallableEmbedder, MockEmbedder
from legis.vector.hnsw import HnswIndex


@dataclass
class ServiceConfig:
    snapshot_path: str
    index_path: str | None = None
    texts_path: str | None = None
    port: int = 8000
    default_k: int = DEFAULT_K
    locale: str = "it"
    cors_origins: list[str] = field(default_factory=list)
    llm: GatewayConfig = field(default_factory=GatewayConfig.from_env)

    def __post_init__(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port {self.port} out of range")


class AppState:
    """Frozen snapshot, text store, index, and gateway shared by handlers."""

    def __init__(
        self,
        graph: GraphStore,
        texts: TextStore,
        index: HnswIndex | None,
        gateway: LlmGateway,
        lexicons: PosLexicons,
        default_k: int = DEFAULT_K,
        locale: str = "it",
    ) -> None:
        graph.freeze()
        if index is not None:
            index.freeze()
        self.graph = graph
        self.texts = texts
        self.index = index
        self.gateway = gateway
        self.lexicons = lexicons
        self.default_k = default_k
        self.locale = locale
        self._profile_cached = lru_cache(maxsize=4096)(self._profile_uncached)

    @classmethod
    def load(cls, config: ServiceConfig) -> "AppState":
        graph = load_snapshot(config.snapshot_path)
        texts_path = Path(config.texts_path or default_texts_path(config.snapshot_path))
        texts = TextStore.load(texts_path) if texts_path.is_file() else TextStore()
        gateway = LlmGateway(config.llm)
        embedder = (
            MockEmbedder(config.llm.embed_dimension)
            if config.llm.mode == MODE_MOCK
            else CallableEmbedder(gateway.embed, config.llm.embed_dimension)
        )
        index: HnswIndex | None = None
        if config.index_path and Path(config.index_path).is_file():
            index = HnswIndex.load(config.index_path)
        elif len(texts):
            # Embeddings are derived data; rebuild from stored texts.
            index = build_index(graph, texts, embedder)
        state = cls(
            graph=graph,
            texts=texts,
            index=index,
            gateway=gateway,
            lexicons=PosLexicons.italian_defaults(),
            default_k=config.default_k,
            locale=config.locale,
        )
        state.embedder = embedder
        return state

    @property
    def ctx(self) -> PipelineContext:
        if self.index is None:
            raise IoError("no vector index available")
        return PipelineContext(
            graph=self.graph,
            index=self.index,
            embedder=getattr(self, "embedder", MockEmbedder()),
            gateway=self.gateway,
            texts=self.texts,
            lexicons=self.lexicons,
            default_k=self.default_k,
            locale=self.locale,
        )

    def profile_of(self, law_id: str) -> ReadabilityProfile:
        return self._profile_cached(law_id)

    def _profile_uncached(self, law_id: str) -> ReadabilityProfile:
        if law_id not in self.texts:
            raise NodeNotFound(law_id)
        text = self.texts.text_of(law_id)
        if not text.strip():
            raise EmptyText(law_id)
        return profile(text, self.lexicons)
