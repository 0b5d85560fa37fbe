"""Word lists backing the part-of-speech and clause heuristics.

Lexicons live in plain-text files (one entry per line, ``#`` starts a
comment) so a deployment can swap the shipped Italian defaults for another
language without touching code.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

_DATA_PACKAGE = "legis.textmetrics.data"


def load_wordlist(path: str | Path) -> set[str]:
    """Read a lexicon file into a lowercase set, skipping comments and blanks."""
    entries: set[str] = set()
    text = Path(path).read_text(encoding="utf-8")
    for line in text.splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            entries.add(word)
    return entries


def _packaged_wordlist(name: str) -> set[str]:
    with resources.as_file(resources.files(_DATA_PACKAGE) / name) as path:
        return load_wordlist(path)


@dataclass(frozen=True)
class PosLexicons:
    """Closed-class word sets and suffix sets used by the metric heuristics."""

    pronoun_list: frozenset[str]
    adjective_suffixes: frozenset[str]
    gerund_suffixes: frozenset[str]
    subordinators: frozenset[str]

    def __post_init__(self) -> None:
        for field in ("pronoun_list", "adjective_suffixes", "gerund_suffixes", "subordinators"):
            values = getattr(self, field)
            if not values:
                raise ValueError(f"lexicon {field} must not be empty")
            if any(w != w.lower() for w in values):
                raise ValueError(f"lexicon {field} entries must be lowercase")

    @classmethod
    def italian_defaults(cls) -> "PosLexicons":
        return cls(
            pronoun_list=frozenset(_packaged_wordlist("pronouns_it.txt")),
            adjective_suffixes=frozenset(_packaged_wordlist("adjective_suffixes_it.txt")),
            gerund_suffixes=frozenset(_packaged_wordlist("gerund_suffixes_it.txt")),
            subordinators=frozenset(_packaged_wordlist("subordinators_it.txt")),
        )


def italian_stopwords() -> frozenset[str]:
    """Function words ignored when ranking content tokens."""
    return frozenset(_packaged_wordlist("stopwords_it.txt"))
