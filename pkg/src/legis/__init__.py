"""Legislative corpus analytics over a property graph of laws."""

__version__ = "0.1.0"
