"""Normative-landscape retrieval for a proposed law.

Five data-dependent steps: take the user's title or keywords, extract
topics, expand them with near topics (best-effort), retrieve in-force laws
whose embeddings sit closest to the topic text, and rank the preamble
citations of those laws by how many of them cite each target. The result
carries every intermediate so a client can show the whole walk.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from datetime import date

from legis.errors import EmptyInput, EmptyTopics, GatewayError, UnparsableOutput
from legis.llm.gateway import ChatRequest, parse_topic_list
from legis.pipeline.context import PipelineContext

MAX_TOPICS = 20

_OVERFETCH_FACTOR = 4


@dataclass(frozen=True)
class TopicSet:
    seed_topics: list[str]
    expanded_topics: list[str]
    expansion_failed: bool = False


@dataclass(frozen=True)
class RelevantLaw:
    law_id: str
    similarity: float


@dataclass(frozen=True)
class RelevantLawSet:
    as_of: date
    entries: list[RelevantLaw]

    def law_ids(self) -> list[str]:
        return [e.law_id for e in self.entries]


@dataclass(frozen=True)
class FoundationCitation:
    target_id: str
    citing_count: int
    relative_frequency: float


@dataclass(frozen=True)
class LandscapeResult:
    input_text: str
    as_of: date
    topics: TopicSet
    relevant_laws: RelevantLawSet
    foundations: list[FoundationCitation]


def extract_topics(ctx: PipelineContext, input_text: str) -> TopicSet:
    if not input_text or not input_text.strip():
        raise EmptyInput("topic extraction needs a non-empty input")
    raw = ctx.gateway.chat(ChatRequest(template_id="topic_extraction", variables={"text": input_text}))
    try:
        topics = parse_topic_list(raw)
    except UnparsableOutput as exc:
        raise EmptyTopics(str(exc)) from exc
    return TopicSet(seed_topics=topics, expanded_topics=list(topics))


def expand_topics(ctx: PipelineContext, topics: TopicSet, input_text: str = "") -> TopicSet:
    """Best-effort expansion: a gateway failure returns the seed unchanged."""
    try:
        raw = ctx.gateway.chat(
            ChatRequest(
                template_id="topic_expansion",
                variables={"topics": ", ".join(topics.seed_topics), "text": input_text},
            )
        )
        candidates = parse_topic_list(raw, max_items=2 * MAX_TOPICS)
    except GatewayError:
        return replace(topics, expanded_topics=list(topics.seed_topics), expansion_failed=True)
    merged = list(topics.seed_topics)
    for topic in candidates:
        if topic not in merged:
            merged.append(topic)
    return TopicSet(seed_topics=topics.seed_topics, expanded_topics=merged[:MAX_TOPICS])


def retrieve_relevant(ctx: PipelineContext, topics: TopicSet, as_of: date, k: int) -> RelevantLawSet:
    """ANN search over law embeddings, filtered to laws in force at ``as_of``.

    The index is over-fetched (factor 4, doubling) because nearby laws may
    have been repealed by the query date.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    query = ctx.embedder.embed(" ".join(topics.expanded_topics))
    in_force = ctx.graph.in_force_laws(as_of)
    index_size = len(ctx.index)
    fetch = min(max(_OVERFETCH_FACTOR * k, k), max(index_size, 1))
    while True:
        hits = ctx.index.search(query, k=fetch, ef_search=max(fetch, 50))
        kept = [
            RelevantLaw(law_id=law_id, similarity=1.0 - dist)
            for law_id, dist in hits
            if law_id in in_force
        ]
        if len(kept) >= k or fetch >= index_size:
            return RelevantLawSet(as_of=as_of, entries=kept[:k])
        fetch = min(fetch * 2, index_size)


def rank_foundations(ctx: PipelineContext, relevant: RelevantLawSet) -> list[FoundationCitation]:
    """Preamble-citation targets ranked by the share of relevant laws citing them.

    A law citing the same target from several preamble refs counts once.
    """
    if not relevant.entries:
        return []
    citing: dict[str, set[str]] = {}
    for law_id in relevant.law_ids():
        for edge in ctx.graph.outgoing_refs(law_id, ref_kind="preamble"):
            citing.setdefault(edge.dst, set()).add(law_id)
    n = len(relevant.entries)
    ranked = sorted(((len(laws), target) for target, laws in citing.items()), key=lambda x: (-x[0], x[1]))
    return [
        FoundationCitation(target_id=target, citing_count=count, relative_frequency=count / n)
        for count, target in ranked
    ]


def landscape(
    ctx: PipelineContext,
    input_text: str,
    as_of: date | None = None,
    k: int | None = None,
) -> LandscapeResult:
    ctx.require_frozen()
    as_of = as_of or date.today()
    k = k or ctx.default_k
    topics = extract_topics(ctx, input_text)
    topics = expand_topics(ctx, topics, input_text)
    relevant = retrieve_relevant(ctx, topics, as_of, k)
    foundations = rank_foundations(ctx, relevant)
    return LandscapeResult(
        input_text=input_text,
        as_of=as_of,
        topics=topics,
        relevant_laws=relevant,
        foundations=foundations,
    )
