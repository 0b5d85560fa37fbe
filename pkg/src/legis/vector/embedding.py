"""Text-embedding backends and vector arithmetic.

The mock backend hashes token bigrams into a fixed number of signed
buckets, which is cheap, offline, and fully deterministic across platforms
(sha256, not the process hash seed). A live backend is any object exposing
``embed(text) -> sequence of floats``; the adapter below normalizes its
output to the configured dimension.
"""

from __future__ import annotations

import hashlib
import re
from typing import Callable, Protocol, Sequence

import numpy as np

from legis.errors import DimensionMismatch, EmptyText

DEFAULT_DIMENSION = 64

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


class EmbeddingBackend(Protocol):
    dimension: int

    def embed(self, text: str) -> np.ndarray: ...


def feature_hash_vector(text: str, dimension: int = DEFAULT_DIMENSION) -> np.ndarray:
    """Unit vector from signed counts of boundary-padded token bigrams."""
    tokens = [t.lower() for t in _TOKEN_RE.findall(text)]
    if not tokens:
        raise EmptyText("cannot embed text without tokens")
    vec = np.zeros(dimension, dtype=np.float64)
    for a, b in zip(["^", *tokens], [*tokens, "$"]):
        digest = hashlib.sha256(f"{a}\x1f{b}".encode("utf-8")).digest()
        bucket = int.from_bytes(digest[:4], "big") % dimension
        sign = 1.0 if digest[4] & 1 else -1.0
        vec[bucket] += sign
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:
        # All signed counts cancelled; fall back to a stable non-zero axis.
        vec[int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:4], "big") % dimension] = 1.0
        norm = 1.0
    return vec / norm


class MockEmbedder:
    """Deterministic offline embedder over hashed token bigrams."""

    def __init__(self, dimension: int = DEFAULT_DIMENSION) -> None:
        self.dimension = dimension

    def embed(self, text: str) -> np.ndarray:
        return feature_hash_vector(text, self.dimension)


class CallableEmbedder:
    """Adapter turning any ``text -> sequence of floats`` into a backend."""

    def __init__(self, fn: Callable[[str], Sequence[float]], dimension: int) -> None:
        self._fn = fn
        self.dimension = dimension

    def embed(self, text: str) -> np.ndarray:
        if not text or not text.strip():
            raise EmptyText("cannot embed empty text")
        values = np.asarray(self._fn(text), dtype=np.float64)
        if values.shape != (self.dimension,):
            raise DimensionMismatch(f"backend returned shape {values.shape}, expected ({self.dimension},)")
        norm = float(np.linalg.norm(values))
        if norm == 0.0 or not np.isfinite(values).all():
            raise DimensionMismatch("backend returned a degenerate vector")
        return values / norm


def cosine_distance(a: np.ndarray, b: np.ndarray) -> float:
    """``1 - dot`` for unit vectors, clamped into [0, 2]."""
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.shape} vs {b.shape}")
    return min(2.0, max(0.0, 1.0 - float(np.dot(a, b))))
