"""Parser for the Akoma-Ntoso subset used by the corpus.

Only a handful of elements are interpreted (act, FRBR identifiers, preface
title, preamble, body, article, ref); everything else is descended into
transparently, so documents with richer markup still parse.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from datetime import date

from legis.errors import MalformedXml, MissingIdentifier, UnparsableHref
from legis.ingest.models import REF_BODY, REF_PREAMBLE, ArticleUnit, LawDocument, RawReference
from legis.ingest.uri import article_uri, law_uri_date, normalize_uri

_NUMBER_RE = re.compile(r"(\d+(?:-\w+)?)")
_WS_RE = re.compile(r"\s+")

# Ordering of Latin article-number extensions ("3" < "3-bis" < "3-ter" ...).
_EXTENSION_ORDER = ("", "bis", "ter", "quater", "quinquies", "sexies", "septies", "octies", "novies", "decies")


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _find_first(root: ET.Element, name: str) -> ET.Element | None:
    for el in root.iter():
        if _local(el.tag) == name:
            return el
    return None


def _clean_text(el: ET.Element, skip: tuple[str, ...] = ()) -> str:
    parts: list[str] = []
    if el.text:
        parts.append(el.text)
    for child in el:
        if _local(child.tag) not in skip:
            parts.append(_clean_text(child))
        if child.tail:
            parts.append(child.tail)
    return _WS_RE.sub(" ", "".join(parts)).strip()


def article_sort_key(number: str) -> tuple[int, int, str]:
    m = re.match(r"(\d+)(?:-(\w+))?", number.strip().lower())
    if m is None:
        return (1 << 30, len(_EXTENSION_ORDER), number.lower())
    base = int(m.group(1))
    ext = m.group(2) or ""
    try:
        rank = _EXTENSION_ORDER.index(ext)
    except ValueError:
        rank = len(_EXTENSION_ORDER)
    return (base, rank, ext)


def parse_akn_document(xml: bytes | str) -> LawDocument:
    """Parse one act into a :class:`LawDocument`.

    Raises :class:`MalformedXml` on parser failure and
    :class:`MissingIdentifier` when no work URI can be resolved. Unknown
    elements are skipped; references whose href does not follow the act URI
    scheme are dropped.
    """
    try:
        root = ET.fromstring(xml)
    except ET.ParseError as exc:
        raise MalformedXml(str(exc)) from exc

    act = root if _local(root.tag) == "act" else _find_first(root, "act")
    if act is None:
        act = root

    law_id = _extract_law_id(act)
    publication_date = _extract_publication_date(act, law_id)
    title = _extract_title(act)
    ministry_domain = _extract_ministry_domain(act)

    preamble = _find_first(act, "preamble")
    body = _find_first(act, "body")

    preamble_refs: list[RawReference] = []
    if preamble is not None:
        preamble_refs = _collect_refs(preamble, source_unit=law_id, kind=REF_PREAMBLE)

    articles: list[ArticleUnit] = []
    body_refs: list[RawReference] = []
    if body is not None:
        article_elements = [el for el in body.iter() if _local(el.tag) == "article"]
        for position, el in enumerate(article_elements, start=1):
            unit = _parse_article(el, law_id, position)
            if unit is None:
                continue
            articles.append(unit)
            body_refs.extend(_collect_refs(el, source_unit=unit.article_id, kind=REF_BODY))
        in_article = {id(e) for el in article_elements for e in el.iter()}
        body_refs.extend(
            _collect_refs(body, source_unit=law_id, kind=REF_BODY, exclude_ids=in_article)
        )

    articles.sort(key=lambda a: article_sort_key(a.number))

    segments = []
    if preamble is not None:
        segments.append(_clean_text(preamble))
    for a in articles:
        segments.append(f"{a.heading}. {a.text}".strip(". ") if a.heading else a.text)
    full_text = "\n".join(s for s in segments if s)

    return LawDocument(
        law_id=law_id,
        title=title,
        publication_date=publication_date,
        ministry_domain=ministry_domain,
        articles=articles,
        preamble_refs=preamble_refs,
        body_refs=body_refs,
        full_text=full_text,
    )


def _extract_law_id(act: ET.Element) -> str:
    el = _find_first(act, "FRBRuri")
    raw = el.get("value") if el is not None else None
    if not raw:
        raise MissingIdentifier("no FRBRuri element with a value attribute")
    try:
        uri, _ = normalize_uri(raw)
    except UnparsableHref as exc:
        raise MissingIdentifier(f"work URI {raw!r} does not follow the act scheme") from exc
    return uri


def _extract_publication_date(act: ET.Element, law_id: str) -> date:
    el = _find_first(act, "FRBRdate")
    raw = el.get("date") if el is not None else None
    if raw:
        try:
            return date.fromisoformat(raw)
        except ValueError:
            pass
    return law_uri_date(law_id)


def _extract_title(act: ET.Element) -> str:
    el = _find_first(act, "docTitle")
    return _clean_text(el) if el is not None else ""


def _extract_ministry_domain(act: ET.Element) -> str | None:
    el = _find_first(act, "keyword")
    if el is None:
        return None
    value = el.get("value") or el.get("showAs") or _clean_text(el)
    return value or None


def _parse_article(el: ET.Element, law_id: str, position: int) -> ArticleUnit | None:
    number = None
    heading = None
    for child in el:
        name = _local(child.tag)
        if name == "num" and number is None:
            m = _NUMBER_RE.search(_clean_text(child))
            if m:
                number = m.group(1).lower()
        elif name == "heading" and heading is None:
            heading = _clean_text(child) or None
    if number is None:
        eid = el.get("eId") or el.get("id") or ""
        m = _NUMBER_RE.search(eid)
        number = m.group(1).lower() if m else str(position)
    text = _clean_text(el, skip=("num", "heading"))
    if not text and not heading:
        return None
    return ArticleUnit(article_id=article_uri(law_id, number), number=number, heading=heading, text=text)


def _collect_refs(
    scope: ET.Element,
    source_unit: str,
    kind: str,
    exclude_ids: set[int] | None = None,
) -> list[RawReference]:
    refs: list[RawReference] = []
    for el in scope.iter():
        if _local(el.tag) != "ref":
            continue
        if exclude_ids is not None and id(el) in exclude_ids:
            continue
        href = el.get("href")
        if not href:
            continue
        try:
            target, specifies = normalize_uri(href)
        except UnparsableHref:
            continue
        refs.append(
            RawReference(
                source_unit=source_unit,
                target_uri=target,
                kind=kind,
                specifies_paragraph=specifies,
                raw_href=href,
            )
        )
    return refs
