from legis.monitor.export import export_dataset, format_number
from legis.monitor.timeseries import (
    GRANULARITIES,
    METRICS,
    DegreeHistogram,
    TimeSeries,
    degree_distribution,
    periods,
    timeseries,
)

__all__ = [
    "DegreeHistogram",
    "GRANULARITIES",
    "METRICS",
    "TimeSeries",
    "degree_distribution",
    "export_dataset",
    "format_number",
    "periods",
    "timeseries",
]
