"""Structured documents produced by corpus ingestion."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from datetime import date

REF_PREAMBLE = "preamble"
REF_BODY = "body"


@dataclass(frozen=True)
class RawReference:
    """One outgoing reference found in a law's preamble or body."""

    source_unit: str
    target_uri: str
    kind: str
    specifies_paragraph: bool
    raw_href: str


@dataclass(frozen=True)
class ArticleUnit:
    article_id: str
    number: str
    heading: str | None
    text: str


@dataclass
class LawDocument:
    """A parsed legal act: metadata, articles, and outgoing references."""

    law_id: str
    title: str
    publication_date: date
    ministry_domain: str | None
    articles: list[ArticleUnit] = field(default_factory=list)
    preamble_refs: list[RawReference] = field(default_factory=list)
    body_refs: list[RawReference] = field(default_factory=list)
    full_text: str = ""

    def to_dict(self) -> dict:
        payload = asdict(self)
        payload["publication_date"] = self.publication_date.isoformat()
        return payload

    @classmethod
    def from_dict(cls, payload: dict) -> "LawDocument":
        return cls(
            law_id=payload["law_id"],
            title=payload["title"],
            publication_date=date.fromisoformat(payload["publication_date"]),
            ministry_domain=payload.get("ministry_domain"),
            articles=[ArticleUnit(**a) for a in payload.get("articles", [])],
            preamble_refs=[RawReference(**r) for r in payload.get("preamble_refs", [])],
            body_refs=[RawReference(**r) for r in payload.get("body_refs", [])],
            full_text=payload.get("full_text", ""),
        )


@dataclass(frozen=True)
class DraftProposal:
    """A law proposal not yet part of the corpus."""

    draft_id: str
    title: str
    text: str
    proponent: str | None = None
    submitted_date: date | None = None
