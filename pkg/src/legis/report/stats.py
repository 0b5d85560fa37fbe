"""Comparison statistics between one readability profile and a set."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from legis.errors import EmptyComparisonSet
from legis.textmetrics.metrics import PROFILE_METRICS, ReadabilityProfile


@dataclass(frozen=True)
class MetricStats:
    subject_value: float
    set_mean: float
    set_std: float
    z_score: float
    percentile: float


@dataclass(frozen=True)
class StatsBundle:
    metrics: dict[str, MetricStats]
    set_size: int
    set_descriptor: str = ""


def comparison_stats(
    subject: ReadabilityProfile,
    others: list[ReadabilityProfile],
    set_descriptor: str = "",
) -> StatsBundle:
    """Per-metric mean, population std, z-score, and midrank percentile.

    The z-score is 0 whenever the comparison set has zero spread, so small
    homogeneous sets never produce infinities. Midrank percentiles count
    ties as half below, half above.
    """
    if not others:
        raise EmptyComparisonSet("comparison set is empty")
    n = len(others)
    metrics: dict[str, MetricStats] = {}
    for name in PROFILE_METRICS:
        subject_value = float(getattr(subject, name))
        values = [float(getattr(p, name)) for p in others]
        # fsum keeps the statistics exactly permutation-invariant; the
        # equal-values guard keeps a homogeneous set at std 0 instead of
        # rounding noise.
        if min(values) == max(values):
            mean, std = values[0], 0.0
        else:
            mean = math.fsum(values) / n
            std = math.sqrt(math.fsum((v - mean) ** 2 for v in values) / n)
        z = (subject_value - mean) / std if std > 0.0 else 0.0
        below = sum(1 for v in values if v < subject_value)
        ties = sum(1 for v in values if v == subject_value)
        percentile = 100.0 * (below + 0.5 * ties) / n
        metrics[name] = MetricStats(
            subject_value=subject_value,
            set_mean=mean,
            set_std=std,
            z_score=z,
            percentile=percentile,
        )
    return StatsBundle(metrics=metrics, set_size=n, set_descriptor=set_descriptor)
