"""Neutrality guardrail over generated text.

Scans for recommendation and opinion markers; a report that trips the
guardrail must never be shipped, callers fall back to the deterministic
template text instead. Matches inside quoted regions are exempt so a
report can cite a metric or a passage verbatim.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

DEFAULT_OPINION_PATTERNS: tuple[str, ...] = (
    "si raccomanda",
    "si consiglia",
    "si suggerisce",
    "raccomandiamo",
    "consigliamo",
    "suggeriamo",
    "dovrebbe",
    "dovrebbero",
    "bisognerebbe",
    "occorrerebbe",
    "sarebbe opportuno",
    "è auspicabile",
    "we recommend",
    "we suggest",
    "should",
    "ought to",
    "it is advisable",
)

_QUOTE_RE = re.compile(r"\"[^\"\n]*\"|“[^”\n]*”|«[^»\n]*»|`[^`\n]*`")


@dataclass(frozen=True)
class GuardrailVerdict:
    passed: bool
    violations: list[str] = field(default_factory=list)


def check_neutrality(
    text: str, patterns: tuple[str, ...] = DEFAULT_OPINION_PATTERNS
) -> GuardrailVerdict:
    if not text:
        return GuardrailVerdict(passed=True, violations=[])
    quoted = [m.span() for m in _QUOTE_RE.finditer(text)]

    def in_quotes(pos: int) -> bool:
        return any(a <= pos < b for a, b in quoted)

    violations: list[str] = []
    for pattern in patterns:
        regex = re.compile(rf"\b{re.escape(pattern)}\b", re.IGNORECASE)
        if any(not in_quotes(m.start()) for m in regex.finditer(text)):
            violations.append(pattern)
    return GuardrailVerdict(passed=not violations, violations=violations)
