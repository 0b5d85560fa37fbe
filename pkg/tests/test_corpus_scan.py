from __future__ import annotations

import json
from pathlib import Path

import pytest

from legis.errors import EmptyDraft, ManifestNotFound
from legis.ingest.corpus import read_abrogations, scan_corpus
from legis.ingest.drafts import parse_draft

ACT_TEMPLATE = """<akomaNtoso xmlns="http://docs.oasis-open.org/legaldocml/ns/akn/3.0">
  <act>
    <meta><identification><FRBRWork>
      <FRBRuri value="/akn/it/act/2020-01-0{n}/{n}"/>
      <FRBRdate date="2020-01-0{n}"/>
    </FRBRWork></identification></meta>
    <preface><docTitle>Atto {n}</docTitle></preface>
    <body><article eId="art_1"><num>Art. 1</num><content><p>Testo {n}.</p></content></article></body>
  </act>
</akomaNtoso>
"""


def write_corpus(tmp_path: Path, n_valid: int, n_corrupt: int = 0) -> Path:
    lines = []
    for i in range(1, n_valid + 1):
        path = tmp_path / f"act{i}.xml"
        path.write_text(ACT_TEMPLATE.format(n=i), encoding="utf-8")
        lines.append(json.dumps({"path": path.name, "format": "akn-xml"}))
    for i in range(n_corrupt):
        path = tmp_path / f"bad{i}.xml"
        path.write_text("<akomaNtoso><act><unclosed", encoding="utf-8")
        lines.append(json.dumps({"path": path.name, "format": "akn-xml"}))
    manifest = tmp_path / "manifest.jsonl"
    manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return manifest


def test_all_valid_files(tmp_path):
    scan = scan_corpus(write_corpus(tmp_path, 3))
    docs = list(scan)
    assert len(docs) == 3
    assert scan.stats.as_dict() == {"parsed": 3, "failed": 0, "skipped": 0}
    assert [d.title for d in docs] == ["Atto 1", "Atto 2", "Atto 3"]


def test_corrupt_file_is_isolated(tmp_path):
    scan = scan_corpus(write_corpus(tmp_path, 2, n_corrupt=1))
    docs = list(scan)
    assert len(docs) == 2
    assert scan.stats.as_dict() == {"parsed": 2, "failed": 1, "skipped": 0}


def test_empty_manifest(tmp_path):
    manifest = tmp_path / "manifest.jsonl"
    manifest.write_text("", encoding="utf-8")
    scan = scan_corpus(manifest)
    assert list(scan) == []
    assert scan.stats.as_dict() == {"parsed": 0, "failed": 0, "skipped": 0}


def test_missing_manifest(tmp_path):
    with pytest.raises(ManifestNotFound):
        scan_corpus(tmp_path / "nope.jsonl")


def test_missing_file_counts_as_failed(tmp_path):
    manifest = tmp_path / "manifest.jsonl"
    manifest.write_text(json.dumps({"path": "ghost.xml", "format": "akn-xml"}) + "\n")
    scan = scan_corpus(manifest)
    assert list(scan) == []
    assert scan.stats.failed == 1


def test_text_format_law(tmp_path):
    law = tmp_path / "plain.txt"
    law.write_text(
        "id: /akn/it/act/2019-07-01/9\n"
        "title: Atto in testo semplice\n"
        "domain: cultura\n"
        "\n"
        "La promozione della cultura costituisce obiettivo primario.\n",
        encoding="utf-8",
    )
    manifest = tmp_path / "manifest.jsonl"
    manifest.write_text(json.dumps({"path": "plain.txt", "format": "text"}) + "\n")
    docs = list(scan_corpus(manifest))
    assert len(docs) == 1
    doc = docs[0]
    assert doc.law_id == "/akn/it/act/2019-07-01/9"
    assert doc.ministry_domain == "cultura"
    assert doc.publication_date.isoformat() == "2019-07-01"
    assert "promozione della cultura" in doc.full_text


def test_unknown_format_skipped(tmp_path):
    manifest = tmp_path / "manifest.jsonl"
    manifest.write_text(json.dumps({"path": "x.pdf", "format": "pdf"}) + "\n")
    scan = scan_corpus(manifest)
    assert list(scan) == []
    assert scan.stats.skipped == 1


def test_read_abrogations(tmp_path):
    events = tmp_path / "abrogations.jsonl"
    events.write_text(
        json.dumps(
            {"src": "/akn/it/act/2010-01-01/2/", "dst": "/akn/it/act/2000-01-01/1", "effective_date": "2011-06-01"}
        )
        + "\n"
    )
    manifest = tmp_path / "manifest.jsonl"
    manifest.write_text(json.dumps({"path": "abrogations.jsonl", "format": "abrogations"}) + "\n")
    records = read_abrogations(manifest)
    assert len(records) == 1
    assert records[0].src == "/akn/it/act/2010-01-01/2"
    assert records[0].effective_date.isoformat() == "2011-06-01"


# --- drafts -----------------------------------------------------------------


def test_parse_draft_populates_fields():
    draft = parse_draft("Testo della proposta di legge.", {"title": "Disciplina X"})
    assert draft.title == "Disciplina X"
    assert draft.text == "Testo della proposta di legge."
    assert draft.draft_id.startswith("draft-")


def test_parse_draft_rejects_empty():
    with pytest.raises(EmptyDraft):
        parse_draft("", {})


def test_parse_draft_id_is_deterministic():
    a = parse_draft("stesso testo", {"title": "T"})
    b = parse_draft("stesso testo", {"title": "T"})
    c = parse_draft("altro testo", {"title": "T"})
    assert a.draft_id == b.draft_id
    assert a.draft_id != c.draft_id
