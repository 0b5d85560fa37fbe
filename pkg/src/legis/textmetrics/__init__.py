from legis.textmetrics.lexicons import PosLexicons, italian_stopwords, load_wordlist
from legis.textmetrics.metrics import (
    DEFAULT_FLESCH_COEFFICIENTS,
    PROFILE_METRICS,
    ReadabilityProfile,
    count_syllables_it,
    embedding_indices,
    flesch,
    gulpease,
    pos_ratios,
    profile,
    split_sentences,
    words,
)

__all__ = [
    "DEFAULT_FLESCH_COEFFICIENTS",
    "PROFILE_METRICS",
    "PosLexicons",
    "ReadabilityProfile",
    "count_syllables_it",
    "embedding_indices",
    "flesch",
    "gulpease",
    "italian_stopwords",
    "load_wordlist",
    "pos_ratios",
    "profile",
    "split_sentences",
    "words",
]
