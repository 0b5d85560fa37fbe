from legis.pipeline.context import DEFAULT_K, EMBED_TEXT_LIMIT, PipelineContext, law_embedding_text
from legis.pipeline.draft import DraftReport, analyze_draft
from legis.pipeline.landscape import (
    MAX_TOPICS,
    FoundationCitation,
    LandscapeResult,
    RelevantLaw,
    RelevantLawSet,
    TopicSet,
    expand_topics,
    extract_topics,
    landscape,
    rank_foundations,
    retrieve_relevant,
)

__all__ = [
    "DEFAULT_K",
    "DraftReport",
    "EMBED_TEXT_LIMIT",
    "FoundationCitation",
    "LandscapeResult",
    "MAX_TOPICS",
    "PipelineContext",
    "RelevantLaw",
    "RelevantLawSet",
    "TopicSet",
    "analyze_draft",
    "expand_topics",
    "extract_topics",
    "landscape",
    "law_embedding_text",
    "rank_foundations",
    "retrieve_relevant",
]
