"""Sidecar store for law texts.

The graph snapshot keeps only a digest of each text; full texts live in
this companion file so metrics and embeddings can be recomputed without
re-parsing the corpus. By convention it sits next to the graph snapshot at
``<snapshot>.texts.json``.
"""

from __future__ import annotations

import json
from pathlib import Path

from legis.errors import CorruptSnapshot
from legis.ingest.models import LawDocument


class TextStore:
    def __init__(self) -> None:
        self._texts: dict[str, dict[str, str]] = {}

    def __len__(self) -> int:
        return len(self._texts)

    def __contains__(self, law_id: str) -> bool:
        return law_id in self._texts

    def add_document(self, doc: LawDocument) -> None:
        self._texts[doc.law_id] = {"title": doc.title, "text": doc.full_text}

    def title_of(self, law_id: str) -> str:
        return self._texts[law_id]["title"]

    def text_of(self, law_id: str) -> str:
        return self._texts[law_id]["text"]

    def law_ids(self) -> list[str]:
        return sorted(self._texts)

    def save(self, path: str | Path) -> None:
        payload = {law_id: self._texts[law_id] for law_id in sorted(self._texts)}
        Path(path).write_text(
            json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=1) + "\n",
            encoding="utf-8",
        )

    @classmethod
    def load(cls, path: str | Path) -> "TextStore":
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise CorruptSnapshot(f"text store {path}: {exc}") from exc
        store = cls()
        if not isinstance(payload, dict):
            raise CorruptSnapshot(f"text store {path}: expected an object")
        for law_id, entry in payload.items():
            store._texts[law_id] = {"title": entry.get("title", ""), "text": entry.get("text", "")}
        return store


def default_texts_path(snapshot_path: str | Path) -> Path:
    return Path(str(snapshot_path) + ".texts.json")
