"""Temporal and structural analytics over a frozen graph.

Flow metrics (laws enacted, new citations) are counted inside each period
and gap-fill with zero; level metrics (in-force count, average outgoing
citations) are evaluated at the period end, inclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date

from legis.errors import InvalidRange
from legis.graph.store import EDGE_CITES, GraphStore, KIND_LAW

METRICS = ("laws_enacted", "in_force_count", "avg_outgoing_citations", "new_citations")
GRANULARITIES = ("year", "month")


@dataclass(frozen=True)
class TimeSeries:
    metric: str
    granularity: str
    points: list[tuple[date, float]]


@dataclass(frozen=True)
class DegreeHistogram:
    edge_kind: str
    direction: str
    bins: dict[int, int]


def periods(granularity: str, start: date, end: date) -> list[tuple[date, date]]:
    """Contiguous ``(period_start, period_end)`` covering [start, end]."""
    if granularity not in GRANULARITIES:
        raise InvalidRange(f"granularity must be one of {GRANULARITIES}")
    if start > end:
        raise InvalidRange(f"{start} > {end}")
    out: list[tuple[date, date]] = []
    if granularity == "year":
        for year in range(start.year, end.year + 1):
            out.append((date(year, 1, 1), date(year, 12, 31)))
    else:
        year, month = start.year, start.month
        while (year, month) <= (end.year, end.month):
            if month == 12:
                nxt_year, nxt_month = year + 1, 1
            else:
                nxt_year, nxt_month = year, month + 1
            out.append((date(year, month, 1), date(nxt_year, nxt_month, 1) - date.resolution))
            year, month = nxt_year, nxt_month
    return out


def timeseries(
    graph: GraphStore,
    metric: str,
    granularity: str,
    from_date: date,
    to_date: date,
) -> TimeSeries:
    if metric not in METRICS:
        raise InvalidRange(f"metric must be one of {METRICS}")
    spans = periods(granularity, from_date, to_date)

    published: list[tuple[date, str]] = [
        (n.properties["publication_date"], n.node_id)
        for n in graph.laws()
        if n.properties.get("publication_date") is not None
    ]
    out_degree = {
        n.node_id: len(graph.outgoing_refs(n.node_id)) for n in graph.laws()
    }

    points: list[tuple[date, float]] = []
    for period_start, period_end in spans:
        if metric == "laws_enacted":
            value = float(sum(1 for d, _ in published if period_start <= d <= period_end))
        elif metric == "in_force_count":
            value = float(len(graph.in_force_laws(period_end)))
        elif metric == "avg_outgoing_citations":
            existing = [law for d, law in published if d <= period_end]
            value = (
                sum(out_degree[law] for law in existing) / len(existing) if existing else 0.0
            )
        else:  # new_citations
            enacted = {law for d, law in published if period_start <= d <= period_end}
            value = float(
                sum(
                    1
                    for e in graph.edges(EDGE_CITES)
                    if graph.owning_law(e.src) in enacted
                )
            )
        points.append((period_start, value))
    return TimeSeries(metric=metric, granularity=granularity, points=points)


def degree_distribution(graph: GraphStore, edge_kind: str, direction: str) -> DegreeHistogram:
    """Histogram of law degrees for one edge kind.

    Citation endpoints are aggregated at law granularity (an article rolls
    up to its parent law); stubs count as citation targets but are excluded
    from the out-degree population.
    """
    if direction not in ("in", "out"):
        raise InvalidRange("direction must be 'in' or 'out'")
    include_stubs = direction == "in"
    population = [n.node_id for n in graph.laws(include_stubs=include_stubs)]
    degree = {law: 0 for law in population}
    rollup = edge_kind == EDGE_CITES
    for edge in graph.edges(edge_kind):
        endpoint = edge.src if direction == "out" else edge.dst
        if rollup and graph.node(endpoint).kind != KIND_LAW:
            endpoint = graph.owning_law(endpoint)
        if endpoint in degree:
            degree[endpoint] += 1
    bins: dict[int, int] = {}
    for value in degree.values():
        bins[value] = bins.get(value, 0) + 1
    return DegreeHistogram(edge_kind=edge_kind, direction=direction, bins=bins)
