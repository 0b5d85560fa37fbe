"""Draft-proposal ingestion from local text."""

from __future__ import annotations

import hashlib
from datetime import date
from typing import Mapping

from legis.errors import EmptyDraft
from legis.ingest.models import DraftProposal


def parse_draft(text: str, metadata: Mapping[str, str] | None = None) -> DraftProposal:
    """Build a :class:`DraftProposal` from raw text plus optional metadata.

    The draft id is a digest of title and text, so re-ingesting the same
    content yields the same id.
    """
    md = dict(metadata or {})
    title = md.get("title", "").strip()
    body = (text or "").strip()
    if not title and not body:
        raise EmptyDraft("draft needs a title or a text")
    draft_id = md.get("draft_id") or _digest_id(title, body)
    submitted = md.get("submitted_date")
    return DraftProposal(
        draft_id=draft_id,
        title=title,
        text=body,
        proponent=md.get("proponent") or None,
        submitted_date=date.fromisoformat(submitted) if submitted else None,
    )


def _digest_id(title: str, body: str) -> str:
    digest = hashlib.sha256(f"{title}\n{body}".encode("utf-8")).hexdigest()
    return f"draft-{digest[:16]}"
