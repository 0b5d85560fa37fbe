"""Linguistic quality metrics for legal texts.

Everything here is deterministic and dependency-free: words are maximal
letter runs (apostrophe-joined clitics split at the apostrophe), syllables
are vowel groups, and part-of-speech ratios come from the lexicon
heuristics in :mod:`legis.textmetrics.lexicons`. A single tokenization pass
feeds every index so the counts reported alongside the scores are exactly
the counts the scores were computed from.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, fields

from legis.errors import EmptyText, NoLetters
from legis.textmetrics.lexicons import PosLexicons

WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)

_VOWELS = set("aeiouàáâèéêìíîòóôùúûäëïöü")

_TERMINATORS = ".!?;"

# Periods after these tokens never end a sentence ("art. 3", "d.lgs. 82").
PROTECTED_ABBREVIATIONS = frozenset(
    {"art", "artt", "n", "nn", "co", "comma", "lett", "par", "d.lgs", "d.l", "d.p.r", "d.m", "all", "cfr", "pag", "tab"}
)

DEFAULT_FLESCH_COEFFICIENTS = (206.835, 1.015, 84.6)


@dataclass(frozen=True)
class ReadabilityProfile:
    """All linguistic metrics for one text."""

    word_count: int
    sentence_count: int
    letter_count: int
    syllable_count: int
    avg_word_length: float
    avg_sentence_length: float
    gerund_ratio: float
    adjective_ratio: float
    pronoun_ratio: float
    flesch: float
    gulpease: float
    embedding_index: float
    center_embedding_index: float

    def to_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


#: Field names of :class:`ReadabilityProfile`, in reporting order.
PROFILE_METRICS: tuple[str, ...] = tuple(f.name for f in fields(ReadabilityProfile))


def words(text: str) -> list[str]:
    """Maximal letter sequences; digits and apostrophes are separators."""
    return WORD_RE.findall(text)


def split_sentences(text: str) -> list[str]:
    """Split on ``. ! ? ;`` followed by whitespace or end of text.

    Periods that close a known abbreviation do not split; decimal points are
    never followed by whitespace, so they are safe by construction.
    """
    sentences: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in _TERMINATORS:
            at_boundary = i + 1 >= n or text[i + 1].isspace()
            if at_boundary and not (ch == "." and _abbreviation_before(text, i)):
                chunk = text[start : i + 1].strip()
                if chunk:
                    sentences.append(chunk)
                start = i + 1
        i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _abbreviation_before(text: str, dot_index: int) -> bool:
    j = dot_index
    while j > 0 and (text[j - 1].isalpha() or text[j - 1] == "."):
        j -= 1
    token = text[j:dot_index].lower().strip(".")
    return token in PROTECTED_ABBREVIATIONS


def count_syllables_it(word: str) -> int:
    """Number of vowel groups in the word, at least 1."""
    letters = [c for c in word.lower() if c.isalpha()]
    if not letters:
        raise NoLetters(f"no letters in {word!r}")
    groups = 0
    previous_was_vowel = False
    for c in letters:
        is_vowel = c in _VOWELS
        if is_vowel and not previous_was_vowel:
            groups += 1
        previous_was_vowel = is_vowel
    return max(groups, 1)


def _counts(text: str) -> tuple[list[str], list[str], int, int]:
    toks = words(text)
    sents = split_sentences(text)
    if not toks or not sents:
        raise EmptyText("text has no words")
    letters = sum(len(w) for w in toks)
    syllables = sum(count_syllables_it(w) for w in toks)
    return toks, sents, letters, syllables


def gulpease(text: str) -> float:
    """Italian readability score on a 0-100 scale (higher reads easier)."""
    toks, sents, letters, _ = _counts(text)
    return _gulpease_from_counts(len(toks), len(sents), letters)


def _gulpease_from_counts(n_words: int, n_sentences: int, n_letters: int) -> float:
    raw = 89.0 + (300.0 * n_sentences - 10.0 * n_letters) / n_words
    return min(100.0, max(0.0, raw))


def flesch(text: str, coefficients: tuple[float, float, float] = DEFAULT_FLESCH_COEFFICIENTS) -> float:
    """Reading-ease score from sentence length and syllables per word.

    ``coefficients`` is ``(c0, c1, c2)`` in ``c0 - c1*(W/S) - c2*(Y/W)``;
    the default is the classic English parameterization. Not clamped.
    """
    toks, sents, _, syllables = _counts(text)
    return _flesch_from_counts(len(toks), len(sents), syllables, coefficients)


def _flesch_from_counts(
    n_words: int, n_sentences: int, n_syllables: int, coefficients: tuple[float, float, float]
) -> float:
    c0, c1, c2 = coefficients
    return c0 - c1 * (n_words / n_sentences) - c2 * (n_syllables / n_words)


def pos_ratios(text: str, lexicons: PosLexicons) -> dict[str, float]:
    """Share of gerunds, adjectives, and pronouns among tokens.

    Pronoun membership wins over the adjective suffix match; gerunds are a
    pure suffix rule.
    """
    toks = [w.lower() for w in words(text)]
    if not toks:
        raise EmptyText("text has no words")
    return _pos_ratios_from_tokens(toks, lexicons)


def _pos_ratios_from_tokens(toks: list[str], lexicons: PosLexicons) -> dict[str, float]:
    gerunds = adjectives = pronouns = 0
    for t in toks:
        if any(t.endswith(s) and len(t) > len(s) for s in lexicons.gerund_suffixes):
            gerunds += 1
        if t in lexicons.pronoun_list:
            pronouns += 1
        elif any(t.endswith(s) for s in lexicons.adjective_suffixes):
            adjectives += 1
    total = len(toks)
    return {
        "gerund_ratio": gerunds / total,
        "adjective_ratio": adjectives / total,
        "pronoun_ratio": pronouns / total,
    }


def embedding_indices(text: str, lexicons: PosLexicons) -> dict[str, float]:
    """Clause-embedding indices per sentence.

    Each sentence is segmented recursively into spans at top-level commas
    and parenthesis groups. A span whose first token is a subordinator is
    embedded; it is additionally center-embedded when it neither starts at
    its parent span's first token nor ends at its last.
    """
    sents = split_sentences(text)
    if not sents:
        raise EmptyText("text has no sentences")
    embedded = 0
    center = 0
    for sentence in sents:
        e, c = _sentence_spans(sentence, lexicons.subordinators)
        embedded += e
        center += c
    return {
        "embedding_index": embedded / len(sents),
        "center_embedding_index": center / len(sents),
    }


def _sentence_spans(sentence: str, subordinators: frozenset[str]) -> tuple[int, int]:
    tokens = [(m.group().lower(), m.start(), m.end()) for m in WORD_RE.finditer(sentence)]
    embedded = 0
    center = 0

    def tokens_in(a: int, b: int) -> list[tuple[str, int, int]]:
        return [t for t in tokens if t[1] >= a and t[2] <= b]

    def children(a: int, b: int) -> list[tuple[int, int]]:
        # Comma segments first; only span into parentheses when no top-level
        # comma splits the range (paren content is then visited on recursion).
        parts: list[tuple[int, int]] = []
        depth = 0
        seg_start = a
        found_comma = False
        for i in range(a, b):
            ch = sentence[i]
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth = max(0, depth - 1)
            elif ch == "," and depth == 0:
                found_comma = True
                parts.append((seg_start, i))
                seg_start = i + 1
        if found_comma:
            parts.append((seg_start, b))
            return parts
        interiors: list[tuple[int, int]] = []
        depth = 0
        open_at = -1
        for i in range(a, b):
            ch = sentence[i]
            if ch in "([":
                if depth == 0:
                    open_at = i + 1
                depth += 1
            elif ch in ")]":
                depth -= 1
                if depth == 0 and open_at >= 0:
                    interiors.append((open_at, i))
                    open_at = -1
                depth = max(depth, 0)
        return interiors

    def walk(a: int, b: int) -> None:
        nonlocal embedded, center
        parent_tokens = tokens_in(a, b)
        if not parent_tokens:
            return
        for ca, cb in children(a, b):
            child_tokens = tokens_in(ca, cb)
            if not child_tokens:
                continue
            if child_tokens[0][0] in subordinators:
                embedded += 1
                starts_at_parent_start = child_tokens[0][1] == parent_tokens[0][1]
                ends_at_parent_end = child_tokens[-1][2] == parent_tokens[-1][2]
                if not starts_at_parent_start and not ends_at_parent_end:
                    center += 1
            walk(ca, cb)

    walk(0, len(sentence))
    return embedded, center


def profile(text: str, lexicons: PosLexicons) -> ReadabilityProfile:
    """Compute every metric from one shared tokenization pass."""
    toks, sents, letters, syllables = _counts(text)
    n_words = len(toks)
    n_sentences = len(sents)
    ratios = _pos_ratios_from_tokens([t.lower() for t in toks], lexicons)
    embedded = 0
    center = 0
    for sentence in sents:
        e, c = _sentence_spans(sentence, lexicons.subordinators)
        embedded += e
        center += c
    return ReadabilityProfile(
        word_count=n_words,
        sentence_count=n_sentences,
        letter_count=letters,
        syllable_count=syllables,
        avg_word_length=letters / n_words,
        avg_sentence_length=n_words / n_sentences,
        gerund_ratio=ratios["gerund_ratio"],
        adjective_ratio=ratios["adjective_ratio"],
        pronoun_ratio=ratios["pronoun_ratio"],
        flesch=_flesch_from_counts(n_words, n_sentences, syllables, DEFAULT_FLESCH_COEFFICIENTS),
        gulpease=_gulpease_from_counts(n_words, n_sentences, letters),
        embedding_index=embedded / n_sentences,
        center_embedding_index=center / n_sentences,
    )
