from legis.report.render import format_value, numerals, polish_report, render_report
from legis.report.stats import MetricStats, StatsBundle, comparison_stats

__all__ = [
    "MetricStats",
    "StatsBundle",
    "comparison_stats",
    "format_value",
    "numerals",
    "polish_report",
    "render_report",
]
