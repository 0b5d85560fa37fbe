from legis.ingest.akn import parse_akn_document
from legis.ingest.corpus import (
    FORMAT_ABROGATIONS,
    FORMAT_AKN,
    FORMAT_TEXT,
    AbrogationRecord,
    CorpusScan,
    IngestStats,
    ManifestEntry,
    read_abrogations,
    read_manifest,
    scan_corpus,
)
from legis.ingest.drafts import parse_draft
from legis.ingest.models import (
    REF_BODY,
    REF_PREAMBLE,
    ArticleUnit,
    DraftProposal,
    LawDocument,
    RawReference,
)
from legis.ingest.textstore import TextStore, default_texts_path
from legis.ingest.uri import article_uri, law_uri_date, normalize_uri

__all__ = [
    "FORMAT_ABROGATIONS",
    "FORMAT_AKN",
    "FORMAT_TEXT",
    "AbrogationRecord",
    "ArticleUnit",
    "CorpusScan",
    "DraftProposal",
    "IngestStats",
    "LawDocument",
    "ManifestEntry",
    "RawReference",
    "REF_BODY",
    "REF_PREAMBLE",
    "TextStore",
    "article_uri",
    "default_texts_path",
    "law_uri_date",
    "normalize_uri",
    "parse_akn_document",
    "parse_draft",
    "read_abrogations",
    "read_manifest",
    "scan_corpus",
]
