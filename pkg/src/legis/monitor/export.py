"""Byte-deterministic CSV and JSON export of monitoring datasets."""

from __future__ import annotations

import json

from legis.monitor.timeseries import DegreeHistogram, TimeSeries


def format_number(value: float) -> str:
    """At most six decimal places, no exponent, no locale separators."""
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"


def export_dataset(data: TimeSeries | DegreeHistogram, fmt: str) -> bytes:
    if fmt not in ("csv", "json"):
        raise ValueError(f"unsupported format {fmt!r}")
    if isinstance(data, TimeSeries):
        payload = {
            "metric": data.metric,
            "granularity": data.granularity,
            "points": [
                {"period": period.isoformat(), "value": value} for period, value in data.points
            ],
        }
        rows = [(period.isoformat(), format_number(value)) for period, value in data.points]
        header = "period,value"
    else:
        ordered = sorted(data.bins.items())
        payload = {
            "edge_kind": data.edge_kind,
            "direction": data.direction,
            "bins": [{"degree": degree, "count": count} for degree, count in ordered],
        }
        rows = [(str(degree), str(count)) for degree, count in ordered]
        header = "degree,count"
    if fmt == "json":
        return (json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")
    lines = [header, *(f"{a},{b}" for a, b in rows)]
    return ("\n".join(lines) + "\n").encode("utf-8")
