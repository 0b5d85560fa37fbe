"""Preventive analysis of a draft proposal.

Three steps: topic extraction from the title or keywords, retrieval of
in-force laws on the same topics (they become the comparison set, since a
draft has no year or ministry to filter by), and a guarded report over the
draft's readability profile against that set. No topic expansion here; the
draft text itself is the anchor.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date

from legis.errors import EmptyComparisonSet, EmptyDraft
from legis.ingest.models import DraftProposal
from legis.pipeline.context import PipelineContext
from legis.pipeline.landscape import RelevantLawSet, extract_topics, retrieve_relevant
from legis.report.render import polish_report, render_report
from legis.report.stats import StatsBundle, comparison_stats
from legis.textmetrics.metrics import ReadabilityProfile, profile

_DESCRIPTOR = {
    "it": "leggi in vigore affini per argomento ({topics})",
    "en": "in-force laws on related topics ({topics})",
}


@dataclass(frozen=True)
class DraftReport:
    draft_id: str
    as_of: date
    profile: ReadabilityProfile
    comparison: StatsBundle
    relevant_laws: RelevantLawSet
    report_text: str
    report_fallback: bool


def analyze_draft(
    ctx: PipelineContext,
    draft: DraftProposal,
    as_of: date | None = None,
    k: int | None = None,
) -> DraftReport:
    ctx.require_frozen()
    if not draft.text and not draft.title:
        raise EmptyDraft(draft.draft_id)
    as_of = as_of or date.today()
    k = k or ctx.default_k

    topics = extract_topics(ctx, draft.title or draft.text)
    relevant = retrieve_relevant(ctx, topics, as_of, k)

    subject = profile(draft.text or draft.title, ctx.lexicons)
    others = [
        profile(ctx.texts.text_of(law_id), ctx.lexicons)
        for law_id in relevant.law_ids()
        if law_id in ctx.texts and ctx.texts.text_of(law_id).strip()
    ]
    if not others:
        raise EmptyComparisonSet("no retrievable law texts to compare against")

    descriptor = _DESCRIPTOR[ctx.locale].format(topics=", ".join(topics.expanded_topics))
    bundle = comparison_stats(subject, others, set_descriptor=descriptor)
    markdown = render_report(bundle, locale=ctx.locale)
    report_text, used_fallback = polish_report(markdown, ctx.gateway)

    return DraftReport(
        draft_id=draft.draft_id,
        as_of=as_of,
        profile=subject,
        comparison=bundle,
        relevant_laws=relevant,
        report_text=report_text,
        report_fallback=used_fallback,
    )
