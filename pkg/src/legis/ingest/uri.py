"""Normalization of act references to a canonical URI.

Canonical ids look like ``/akn/it/act/2010-03-15/123`` with an optional
``#art_N`` fragment. Paragraph fragments (``#com_N`` / ``#par_N``) are not
part of the id; they only signal that the reference points below article
granularity.
"""

from __future__ import annotations

import re
from datetime import date

from legis.errors import UnparsableHref

_ACT_RE = re.compile(r"(?i)/akn/([a-z]{2,3})/act/(\d{4}-\d{2}-\d{2})/([A-Za-z0-9._-]+)")
_FRAGMENT_RE = re.compile(r"#([A-Za-z0-9_-]+)")


def normalize_uri(raw_href: str) -> tuple[str, bool]:
    """Return ``(canonical_uri, specifies_paragraph)`` for an act reference."""
    if not raw_href or not raw_href.strip():
        raise UnparsableHref("empty href")
    href = raw_href.strip()
    m = _ACT_RE.search(href)
    if m is None:
        raise UnparsableHref(raw_href)
    country, act_date, number = m.group(1).lower(), m.group(2), m.group(3).lower()
    try:
        date.fromisoformat(act_date)
    except ValueError as exc:
        raise UnparsableHref(raw_href) from exc

    rest = href[m.end() :]
    article_fragment: str | None = None
    specifies_paragraph = False
    for fragment in _FRAGMENT_RE.findall(rest):
        fragment = fragment.lower()
        if fragment.startswith("art_") and article_fragment is None:
            article_fragment = fragment
        elif fragment.startswith(("com_", "par_")):
            specifies_paragraph = True
    leftover = _FRAGMENT_RE.sub("", rest).strip("/")
    if leftover:
        raise UnparsableHref(raw_href)

    uri = f"/akn/{country}/act/{act_date}/{number}"
    if article_fragment is not None:
        uri += f"#{article_fragment}"
    return uri, specifies_paragraph


def law_uri_date(uri: str) -> date:
    """Publication date embedded in a canonical act URI."""
    m = _ACT_RE.search(uri)
    if m is None:
        raise UnparsableHref(uri)
    return date.fromisoformat(m.group(2))


def article_uri(law_id: str, number: str) -> str:
    return f"{law_id}#art_{number.strip().lower()}"
