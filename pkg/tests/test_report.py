from __future__ import annotations

import dataclasses
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legis.errors import EmptyComparisonSet
from legis.llm import ChatRequest, LlmGateway, check_neutrality
from legis.report import comparison_stats, numerals, polish_report, render_report
from legis.textmetrics import PROFILE_METRICS, ReadabilityProfile


def make_profile(**overrides) -> ReadabilityProfile:
    base = dict(
        word_count=100,
        sentence_count=5,
        letter_count=520,
        syllable_count=210,
        avg_word_length=5.2,
        avg_sentence_length=20.0,
        gerund_ratio=0.02,
        adjective_ratio=0.1,
        pronoun_ratio=0.05,
        flesch=45.0,
        gulpease=55.0,
        embedding_index=0.4,
        center_embedding_index=0.2,
    )
    base.update(overrides)
    return ReadabilityProfile(**base)


class ScriptedGateway(LlmGateway):
    """Gateway double returning a fixed completion for report polishing."""

    def __init__(self, reply: str) -> None:
        super().__init__()
        self._reply = reply

    def chat(self, request: ChatRequest) -> str:
        return self._reply


# --- comparison statistics -------------------------------------------------------


def test_homogeneous_set_gives_zero_z_and_median_percentile():
    subject = make_profile()
    bundle = comparison_stats(subject, [make_profile(), make_profile(), make_profile()])
    for name in PROFILE_METRICS:
        stats = bundle.metrics[name]
        assert stats.z_score == 0.0
        assert stats.percentile == 50.0
        assert stats.set_std == 0.0


def test_two_member_set_hand_computed():
    subject = make_profile(gulpease=60.0)
    others = [make_profile(gulpease=40.0), make_profile(gulpease=60.0)]
    stats = comparison_stats(subject, others).metrics["gulpease"]
    assert stats.set_mean == 50.0
    assert stats.set_std == 10.0
    assert stats.z_score == 1.0
    assert stats.percentile == 75.0


def test_empty_comparison_set_rejected():
    with pytest.raises(EmptyComparisonSet):
        comparison_stats(make_profile(), [])


def test_permutation_invariance():
    rng = random.Random(4)
    others = [make_profile(gulpease=rng.uniform(20, 90), flesch=rng.uniform(0, 90)) for _ in range(8)]
    subject = make_profile()
    a = comparison_stats(subject, others)
    shuffled = others[:]
    rng.shuffle(shuffled)
    b = comparison_stats(subject, shuffled)
    assert a == b


@settings(max_examples=50, deadline=None)
@given(
    values=st.lists(st.floats(min_value=0, max_value=100), min_size=1, max_size=12),
    subject_value=st.floats(min_value=0, max_value=100),
)
def test_percentile_bounds(values, subject_value):
    subject = make_profile(gulpease=subject_value)
    others = [make_profile(gulpease=v) for v in values]
    stats = comparison_stats(subject, others).metrics["gulpease"]
    assert 0.0 <= stats.percentile <= 100.0


# --- rendering ----------------------------------------------------------------------


def test_render_covers_every_metric_and_stays_neutral():
    bundle = comparison_stats(make_profile(), [make_profile(gulpease=40.0)], set_descriptor="anno 2020")
    for locale in ("it", "en"):
        text = render_report(bundle, locale=locale)
        assert "anno 2020" in text
        assert check_neutrality(text).passed
        assert text.count("##") == len(PROFILE_METRICS)


def test_render_locales_same_numbers():
    bundle = comparison_stats(make_profile(gulpease=61.25), [make_profile(gulpease=44.5)])
    it_nums = numerals(render_report(bundle, "it"))
    en_nums = numerals(render_report(bundle, "en"))
    assert it_nums == en_nums


def test_render_is_deterministic():
    bundle = comparison_stats(make_profile(), [make_profile(gulpease=40.0)])
    assert render_report(bundle) == render_report(bundle)


def test_render_unknown_locale():
    bundle = comparison_stats(make_profile(), [make_profile()])
    with pytest.raises(ValueError):
        render_report(bundle, locale="de")


# --- polishing ------------------------------------------------------------------------


def template_report() -> str:
    bundle = comparison_stats(make_profile(), [make_profile(gulpease=40.0), make_profile(gulpease=70.0)])
    return render_report(bundle)


def test_mock_polish_is_identity_without_fallback():
    text, fallback = polish_report(template_report(), LlmGateway())
    assert text == template_report()
    assert fallback is False


def test_opinionated_output_falls_back():
    report = template_report()
    bad = report + "\nSi raccomanda di riscrivere l'articolo."
    text, fallback = polish_report(report, ScriptedGateway(bad))
    assert fallback is True
    assert text == report


def test_numeral_dropping_output_falls_back():
    import re

    report = template_report()
    mutated = re.sub(r"\d+(?:[.,]\d+)?", "", report, count=1)
    assert mutated != report
    text, fallback = polish_report(report, ScriptedGateway(mutated))
    assert fallback is True
    assert text == report


def test_numeral_preserving_rewrite_ships():
    report = template_report()
    rewritten = "Sintesi variata.\n" + report
    text, fallback = polish_report(report, ScriptedGateway(rewritten))
    assert fallback is False
    assert text == rewritten
    assert numerals(report) <= numerals(text)


class FailingGateway(LlmGateway):
    def chat(self, request: ChatRequest) -> str:
        from legis.errors import BackendUnavailable

        raise BackendUnavailable("down")


def test_gateway_failure_falls_back_silently():
    report = template_report()
    text, fallback = polish_report(report, FailingGateway())
    assert (text, fallback) == (report, True)
