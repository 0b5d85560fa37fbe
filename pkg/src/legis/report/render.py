"""Deterministic report rendering and guarded polishing.

The rendered template is purely factual: one section per metric with the
subject value, the comparison mean and spread, and the percentile. It
contains no recommendation language, so it passes the neutrality guardrail
by construction. Polishing sends the template through the gateway but ships
the result only when the guardrail passes and every numeral of the template
survived; otherwise the template itself is returned.
"""

from __future__ import annotations

import re
from collections import Counter

from legis.llm.gateway import ChatRequest, LlmGateway
from legis.llm.guardrail import check_neutrality
from legis.errors import GatewayError
from legis.report.stats import StatsBundle
from legis.textmetrics.metrics import PROFILE_METRICS

_NUMERAL_RE = re.compile(r"\d+(?:[.,]\d+)?")

_METRIC_LABELS = {
    "it": {
        "word_count": "Numero di parole",
        "sentence_count": "Numero di frasi",
        "letter_count": "Numero di lettere",
        "syllable_count": "Numero di sillabe",
        "avg_word_length": "Lunghezza media delle parole",
        "avg_sentence_length": "Lunghezza media delle frasi",
        "gerund_ratio": "Frequenza relativa dei gerundi",
        "adjective_ratio": "Frequenza relativa degli aggettivi",
        "pronoun_ratio": "Frequenza relativa dei pronomi",
        "flesch": "Indice di leggibilità Flesch",
        "gulpease": "Indice Gulpease",
        "embedding_index": "Indice di subordinazione",
        "center_embedding_index": "Indice di subordinazione incassata",
    },
    "en": {
        "word_count": "Word count",
        "sentence_count": "Sentence count",
        "letter_count": "Letter count",
        "syllable_count": "Syllable count",
        "avg_word_length": "Average word length",
        "avg_sentence_length": "Average sentence length",
        "gerund_ratio": "Gerund ratio",
        "adjective_ratio": "Adjective ratio",
        "pronoun_ratio": "Pronoun ratio",
        "flesch": "Flesch reading-ease index",
        "gulpease": "Gulpease index",
        "embedding_index": "Clause embedding index",
        "center_embedding_index": "Center-embedding index",
    },
}

_STRINGS = {
    "it": {
        "title": "# Rapporto di analisi linguistica",
        "set_line": "Insieme di confronto: {descriptor} ({size} testi).",
        "subject": "Valore del testo in esame",
        "mean": "Media dell'insieme di confronto",
        "std": "Deviazione standard dell'insieme",
        "z": "Punteggio z",
        "percentile": "Percentile",
    },
    "en": {
        "title": "# Linguistic analysis report",
        "set_line": "Comparison set: {descriptor} ({size} texts).",
        "subject": "Value for the text under review",
        "mean": "Comparison-set mean",
        "std": "Comparison-set standard deviation",
        "z": "Z-score",
        "percentile": "Percentile",
    },
}


def format_value(value: float) -> str:
    """Fixed-point with up to 4 decimals, trailing zeros trimmed."""
    text = f"{value:.4f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"


def render_report(bundle: StatsBundle, locale: str = "it") -> str:
    if locale not in _STRINGS:
        raise ValueError(f"unsupported locale {locale!r}")
    labels = _METRIC_LABELS[locale]
    strings = _STRINGS[locale]
    lines = [strings["title"], ""]
    lines.append(strings["set_line"].format(descriptor=bundle.set_descriptor or "-", size=bundle.set_size))
    lines.append("")
    for name in PROFILE_METRICS:
        stats = bundle.metrics[name]
        lines.append(f"## {labels[name]}")
        lines.append(f"- {strings['subject']}: {format_value(stats.subject_value)}")
        lines.append(f"- {strings['mean']}: {format_value(stats.set_mean)}")
        lines.append(f"- {strings['std']}: {format_value(stats.set_std)}")
        lines.append(f"- {strings['z']}: {format_value(stats.z_score)}")
        lines.append(f"- {strings['percentile']}: {format_value(stats.percentile)}")
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def numerals(text: str) -> Counter:
    return Counter(_NUMERAL_RE.findall(text))


def polish_report(markdown: str, gateway: LlmGateway) -> tuple[str, bool]:
    """Return ``(text, used_fallback)``.

    The polished text ships only when it stays neutral and preserves every
    numeral of the template; any gateway failure falls back silently.
    """
    try:
        polished = gateway.chat(ChatRequest(template_id="report_polish", variables={"report": markdown}))
    except GatewayError:
        return markdown, True
    if not polished.strip():
        return markdown, True
    if not check_neutrality(polished).passed:
        return markdown, True
    missing = numerals(markdown) - numerals(polished)
    if missing:
        return markdown, True
    return polished, False
