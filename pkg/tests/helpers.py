"""Shared test utilities: synthetic corpora and independent oracles.

The oracles here deliberately re-derive every answer from raw records with
plain loops, so they share no code path with the implementations under
test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from datetime import date, timedelta

from legis.graph.store import GraphStore
from legis.ingest.models import ArticleUnit, LawDocument, RawReference


@dataclass
class RandomCorpus:
    graph: GraphStore
    publication: dict[str, date] = field(default_factory=dict)
    refs: list[tuple[str, str, str]] = field(default_factory=list)  # (citing law, target, ref_kind)
    abrogations: list[tuple[str, str, date]] = field(default_factory=list)


def random_date(rng: random.Random, start_year: int = 1950, end_year: int = 2023) -> date:
    base = date(start_year, 1, 1)
    span = (date(end_year, 12, 31) - base).days
    return base + timedelta(days=rng.randrange(span + 1))


def build_random_corpus(
    rng: random.Random,
    n_laws: int,
    max_refs_per_law: int = 3,
    abrogation_rate: float = 0.2,
    with_articles: bool = False,
) -> RandomCorpus:
    law_ids = [
        f"/akn/it/act/{random_date(rng).isoformat()}/{i + 1}" for i in range(n_laws)
    ]
    # Re-draw duplicates (same date and ordinal cannot collide, but be safe).
    assert len(set(law_ids)) == n_laws

    corpus = RandomCorpus(graph=GraphStore())
    order = list(law_ids)
    rng.shuffle(order)
    for law_id in order:
        published = random_date(rng)
        corpus.publication[law_id] = published
        articles: list[ArticleUnit] = []
        if with_articles:
            for n in range(1, rng.randint(1, 3) + 1):
                articles.append(
                    ArticleUnit(
                        article_id=f"{law_id}#art_{n}",
                        number=str(n),
                        heading=None,
                        text=f"testo dell'articolo {n}",
                    )
                )
        preamble_refs = []
        body_refs = []
        for _ in range(rng.randrange(max_refs_per_law + 1)):
            target = rng.choice(law_ids)
            if target == law_id:
                continue
            kind = rng.choice(["preamble", "body"])
            source = law_id
            if kind == "body" and articles:
                source = rng.choice(articles).article_id
            ref = RawReference(
                source_unit=source,
                target_uri=target,
                kind=kind,
                specifies_paragraph=rng.random() < 0.3,
                raw_href=target,
            )
            (preamble_refs if kind == "preamble" else body_refs).append(ref)
            corpus.refs.append((law_id, target, kind))
        corpus.graph.upsert_law(
            LawDocument(
                law_id=law_id,
                title=f"Legge {law_id}",
                publication_date=published,
                ministry_domain=rng.choice(["energia", "ambiente", "giustizia", None]),
                articles=articles,
                preamble_refs=preamble_refs,
                body_refs=body_refs,
                full_text=f"testo della legge {law_id}",
            )
        )

    n_abrogations = int(n_laws * abrogation_rate)
    for _ in range(n_abrogations):
        src, dst = rng.sample(law_ids, 2)
        effective = random_date(rng, 1960, 2024)
        corpus.graph.add_abrogation(src, dst, effective)
        corpus.abrogations.append((src, dst, effective))
    return corpus


def in_force_oracle(corpus: RandomCorpus, as_of: date) -> set[str]:
    """Plain scan over raw records, independent of the graph-store logic."""
    repealed_by: dict[str, list[date]] = {}
    for _, dst, effective in corpus.abrogations:
        repealed_by.setdefault(dst, []).append(effective)
    result = set()
    for law_id, published in corpus.publication.items():
        if published > as_of:
            continue
        if any(eff <= as_of for eff in repealed_by.get(law_id, [])):
            continue
        result.add(law_id)
    return result


def foundation_oracle(
    refs: list[tuple[str, str, str]], relevant: list[str]
) -> list[tuple[str, int]]:
    """Distinct-citing-law recount restricted to preamble references."""
    relevant_set = set(relevant)
    citing: dict[str, set[str]] = {}
    for law, target, kind in refs:
        if kind == "preamble" and law in relevant_set:
            citing.setdefault(target, set()).add(law)
    return sorted(((t, len(s)) for t, s in citing.items()), key=lambda x: (-x[1], x[0]))
