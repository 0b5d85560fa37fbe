"""Bulk ingestion driven by a corpus manifest.

The manifest is line-delimited JSON, one record per file:
``{"path": "laws/act1.xml", "format": "akn-xml"}``. Relative paths resolve
against the manifest's directory. Besides ``akn-xml`` there is a ``text``
format for acts available only as plain text (front-matter header lines
``id:``/``title:``/``date:``/``domain:``, blank line, body) and an
``abrogations`` format pointing at a line-delimited list of repeal events
``{"src": ..., "dst": ..., "effective_date": "YYYY-MM-DD"}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path
from typing import Iterator

from legis.errors import LegisError, ManifestNotFound
from legis.ingest.akn import parse_akn_document
from legis.ingest.models import LawDocument
from legis.ingest.uri import law_uri_date, normalize_uri

FORMAT_AKN = "akn-xml"
FORMAT_TEXT = "text"
FORMAT_ABROGATIONS = "abrogations"

_DOCUMENT_FORMATS = (FORMAT_AKN, FORMAT_TEXT)


@dataclass
class IngestStats:
    parsed: int = 0
    failed: int = 0
    skipped: int = 0

    def as_dict(self) -> dict[str, int]:
        return {"parsed": self.parsed, "failed": self.failed, "skipped": self.skipped}


@dataclass(frozen=True)
class ManifestEntry:
    path: Path
    format: str


@dataclass(frozen=True)
class AbrogationRecord:
    src: str
    dst: str
    effective_date: date


def read_manifest(manifest_path: str | Path) -> list[ManifestEntry]:
    manifest_path = Path(manifest_path)
    if not manifest_path.is_file():
        raise ManifestNotFound(str(manifest_path))
    entries: list[ManifestEntry] = []
    base = manifest_path.parent
    for line in manifest_path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        record = json.loads(line)
        path = Path(record["path"])
        if not path.is_absolute():
            path = base / path
        entries.append(ManifestEntry(path=path, format=record.get("format", FORMAT_AKN)))
    return entries


@dataclass
class CorpusScan:
    """Lazy iteration over a manifest's documents, counting outcomes.

    ``stats`` is complete only once the iterator is exhausted. A file that
    fails to parse is counted and skipped; it never aborts the stream.
    """

    entries: list[ManifestEntry]
    stats: IngestStats = field(default_factory=IngestStats)

    def __iter__(self) -> Iterator[LawDocument]:
        for entry in self.entries:
            if entry.format not in _DOCUMENT_FORMATS:
                self.stats.skipped += 1
                continue
            try:
                doc = _parse_entry(entry)
            except (LegisError, OSError, ValueError):
                self.stats.failed += 1
                continue
            self.stats.parsed += 1
            yield doc


def scan_corpus(manifest_path: str | Path) -> CorpusScan:
    return CorpusScan(entries=read_manifest(manifest_path))


def read_abrogations(manifest_path: str | Path) -> list[AbrogationRecord]:
    """Collect repeal events from every ``abrogations`` entry in the manifest."""
    records: list[AbrogationRecord] = []
    for entry in read_manifest(manifest_path):
        if entry.format != FORMAT_ABROGATIONS:
            continue
        for line in entry.path.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            raw = json.loads(line)
            records.append(
                AbrogationRecord(
                    src=normalize_uri(raw["src"])[0],
                    dst=normalize_uri(raw["dst"])[0],
                    effective_date=date.fromisoformat(raw["effective_date"]),
                )
            )
    return records


def _parse_entry(entry: ManifestEntry) -> LawDocument:
    data = entry.path.read_bytes()
    if entry.format == FORMAT_AKN:
        return parse_akn_document(data)
    return _parse_text_law(data.decode("utf-8"))


def _parse_text_law(raw: str) -> LawDocument:
    header: dict[str, str] = {}
    lines = raw.splitlines()
    body_start = 0
    for i, line in enumerate(lines):
        if not line.strip():
            body_start = i + 1
            break
        key, _, value = line.partition(":")
        header[key.strip().lower()] = value.strip()
        body_start = i + 1
    law_id, _ = normalize_uri(header["id"])
    published = (
        date.fromisoformat(header["date"]) if header.get("date") else law_uri_date(law_id)
    )
    body = "\n".join(lines[body_start:]).strip()
    return LawDocument(
        law_id=law_id,
        title=header.get("title", ""),
        publication_date=published,
        ministry_domain=header.get("domain") or None,
        full_text=body,
    )
