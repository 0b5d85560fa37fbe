from __future__ import annotations

from pathlib import Path

import pytest

from legis.build import BuildResult, build_corpus
from legis.llm.gateway import LlmGateway
from legis.pipeline.context import PipelineContext
from legis.textmetrics.lexicons import PosLexicons
from legis.vector.embedding import MockEmbedder

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS_MANIFEST = FIXTURES / "corpus" / "manifest.jsonl"
GOLDEN = FIXTURES / "golden"


@pytest.fixture(scope="session")
def lexicons() -> PosLexicons:
    return PosLexicons.italian_defaults()


@pytest.fixture(scope="session")
def corpus_manifest() -> Path:
    return CORPUS_MANIFEST


@pytest.fixture(scope="session")
def built() -> BuildResult:
    """The shipped fixture corpus, ingested once per session."""
    return build_corpus(str(CORPUS_MANIFEST), MockEmbedder(), seed=0)


@pytest.fixture(scope="session")
def ctx(built: BuildResult, lexicons: PosLexicons) -> PipelineContext:
    built.graph.freeze()
    built.index.freeze()
    return PipelineContext(
        graph=built.graph,
        index=built.index,
        embedder=MockEmbedder(),
        gateway=LlmGateway(),
        texts=built.texts,
        lexicons=lexicons,
    )


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN
