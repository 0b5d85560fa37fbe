"""Hierarchical navigable small-world index for approximate nearest neighbor.

Layered proximity graph over unit vectors with cosine distance. Level
assignment draws from a per-index seeded generator so the structure (and
therefore every search result) is reproducible from the insert order.
The build phase is single-writer; the first search freezes the index and
later inserts are rejected.
"""

from __future__ import annotations

import heapq
import json
import math
import random
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from legis.errors import (
    CorruptSnapshot,
    DimensionMismatch,
    DuplicateId,
    EmptyIndex,
    FrozenStateError,
    VersionMismatch,
)

INDEX_FORMAT_VERSION = 1

DEFAULT_M = 16
DEFAULT_EF_CONSTRUCTION = 200
DEFAULT_EF_SEARCH = 50


class HnswIndex:
    def __init__(
        self,
        dimension: int,
        m: int = DEFAULT_M,
        ef_construction: int = DEFAULT_EF_CONSTRUCTION,
        seed: int = 0,
    ) -> None:
        if m < 2:
            raise ValueError("m must be >= 2")
        self.dimension = dimension
        self.m = m
        self.m0 = 2 * m
        self.ef_construction = ef_construction
        self.seed = seed
        self.level_scale = 1.0 / math.log(m)
        self._rng = random.Random(seed)
        self._ids: list[str] = []
        self._id_to_idx: dict[str, int] = {}
        self._vectors = np.zeros((0, dimension), dtype=np.float64)
        self._levels: list[int] = []
        self._links: list[list[list[int]]] = []
        self._entry: int | None = None
        self._max_level = -1
        self._frozen = False

    # --- basics ------------------------------------------------------------

    def __len__(self) -> int:
        return len(self._ids)

    def __contains__(self, item_id: str) -> bool:
        return item_id in self._id_to_idx

    @property
    def frozen(self) -> bool:
        return self._frozen

    def freeze(self) -> None:
        self._frozen = True

    def ids(self) -> list[str]:
        return list(self._ids)

    def vector_of(self, item_id: str) -> np.ndarray:
        return self._vectors[self._id_to_idx[item_id]].copy()

    def items(self) -> dict[str, np.ndarray]:
        return {item_id: self._vectors[i].copy() for i, item_id in enumerate(self._ids)}

    def _check_vector(self, vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector, dtype=np.float64)
        if vector.shape != (self.dimension,):
            raise DimensionMismatch(f"vector shape {vector.shape}, index dimension {self.dimension}")
        if not np.isfinite(vector).all():
            raise DimensionMismatch("vector has non-finite entries")
        norm = float(np.linalg.norm(vector))
        if norm == 0.0:
            raise DimensionMismatch("zero vector")
        return vector / norm

    def _distances(self, query: np.ndarray, idxs: list[int]) -> np.ndarray:
        return 1.0 - self._vectors[idxs] @ query

    def _draw_level(self) -> int:
        u = 1.0 - self._rng.random()
        return int(-math.log(u) * self.level_scale)

    # --- construction --------------------------------------------------------

    def insert(self, item_id: str, vector: np.ndarray) -> None:
        if self._frozen:
            raise FrozenStateError("index already searched or loaded; inserts are rejected")
        if item_id in self._id_to_idx:
            raise DuplicateId(item_id)
        vector = self._check_vector(vector)

        idx = len(self._ids)
        level = self._draw_level()
        self._ids.append(item_id)
        self._id_to_idx[item_id] = idx
        self._vectors = np.vstack([self._vectors, vector[None, :]])
        self._levels.append(level)
        self._links.append([[] for _ in range(level + 1)])

        if self._entry is None:
            self._entry = idx
            self._max_level = level
            return

        current = [self._entry]
        for layer in range(self._max_level, level, -1):
            nearest = self._search_layer(vector, current, 1, layer)
            current = [nearest[0][1]]

        for layer in range(min(level, self._max_level), -1, -1):
            candidates = self._search_layer(vector, current, self.ef_construction, layer)
            max_conn = self.m0 if layer == 0 else self.m
            neighbors = self._select_neighbors(vector, candidates, self.m)
            self._links[idx][layer] = list(neighbors)
            for nb in neighbors:
                nb_links = self._links[nb][layer]
                if idx not in nb_links:
                    nb_links.append(idx)
                if len(nb_links) > max_conn:
                    pruned = self._select_neighbors(
                        self._vectors[nb],
                        list(zip(self._distances(self._vectors[nb], nb_links), nb_links)),
                        max_conn,
                    )
                    self._links[nb][layer] = pruned
            current = [i for _, i in candidates]

        if level > self._max_level:
            self._entry = idx
            self._max_level = level

    def _select_neighbors(
        self, base: np.ndarray, candidates: list[tuple[float, int]], m: int
    ) -> list[int]:
        """Diversity-aware selection: keep candidates closer to the base
        point than to anything already selected, then fill from the
        discarded ones so connectivity never starves."""
        selected: list[int] = []
        discarded: list[tuple[float, int]] = []
        for dist_e, e in sorted(candidates):
            if len(selected) == m:
                break
            if selected:
                to_selected = self._distances(self._vectors[e], selected)
                if float(np.min(to_selected)) <= dist_e:
                    discarded.append((dist_e, e))
                    continue
            selected.append(e)
        for dist_e, e in discarded:
            if len(selected) == m:
                break
            selected.append(e)
        return selected

    # --- search ---------------------------------------------------------------

    def _search_layer(
        self, query: np.ndarray, entries: list[int], ef: int, layer: int
    ) -> list[tuple[float, int]]:
        visited = set(entries)
        entry_dists = self._distances(query, entries)
        candidates: list[tuple[float, int]] = list(zip(entry_dists.tolist(), entries))
        heapq.heapify(candidates)
        best = [(-d, i) for d, i in candidates]
        heapq.heapify(best)

        while candidates:
            dist, node = heapq.heappop(candidates)
            if dist > -best[0][0]:
                break
            neighbors = [n for n in self._links[node][layer] if n not in visited]
            if not neighbors:
                continue
            visited.update(neighbors)
            neighbor_dists = self._distances(query, neighbors)
            for nd, nb in zip(neighbor_dists.tolist(), neighbors):
                if len(best) < ef:
                    heapq.heappush(candidates, (nd, nb))
                    heapq.heappush(best, (-nd, nb))
                elif nd < -best[0][0]:
                    heapq.heappush(candidates, (nd, nb))
                    heapq.heappushpop(best, (-nd, nb))
        return sorted((-d, i) for d, i in best)

    def search(
        self, query: np.ndarray, k: int, ef_search: int | None = None
    ) -> list[tuple[str, float]]:
        """Approximate k nearest items as ``(id, distance)``, distance
        ascending with ties broken by id. With ``ef_search`` at least the
        index size this equals exact nearest neighbors."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if ef_search is not None and ef_search < k:
            raise ValueError("ef_search must be >= k")
        if self._entry is None:
            raise EmptyIndex("no vectors inserted")
        self._frozen = True
        query = self._check_vector(query)
        ef = max(ef_search if ef_search is not None else DEFAULT_EF_SEARCH, k)

        current = [self._entry]
        for layer in range(self._max_level, 0, -1):
            nearest = self._search_layer(query, current, 1, layer)
            current = [nearest[0][1]]
        found = self._search_layer(query, current, ef, 0)
        results = sorted((dist, self._ids[idx]) for dist, idx in found)
        return [(item_id, dist) for dist, item_id in results[:k]]

    # --- diagnostics ------------------------------------------------------------

    def validate(self) -> list[str]:
        """Structural invariant violations, empty when the graph is sound."""
        problems: list[str] = []
        n = len(self._ids)
        if n == 0:
            return problems
        if self._entry is None or self._levels[self._entry] != max(self._levels):
            problems.append("entry point is not at the maximum level")
        for idx in range(n):
            for layer, links in enumerate(self._links[idx]):
                cap = self.m0 if layer == 0 else self.m
                if len(links) > cap:
                    problems.append(f"node {idx} layer {layer} degree {len(links)} > {cap}")
                if len(set(links)) != len(links):
                    problems.append(f"node {idx} layer {layer} has duplicate links")
                if idx in links:
                    problems.append(f"node {idx} layer {layer} links to itself")
                for nb in links:
                    if nb >= n:
                        problems.append(f"node {idx} layer {layer} links to missing node {nb}")
                    elif self._levels[nb] < layer:
                        problems.append(f"node {idx} layer {layer} links to {nb} below its level")
        reachable = {self._entry}
        queue = [self._entry]
        while queue:
            node = queue.pop()
            for links in self._links[node]:
                for nb in links:
                    if nb not in reachable:
                        reachable.add(nb)
                        queue.append(nb)
        if len(reachable) != n:
            problems.append(f"only {len(reachable)}/{n} nodes reachable from the entry point")
        return problems

    # --- persistence -----------------------------------------------------------

    def save(self, path: str | Path) -> None:
        payload = {
            "format_version": INDEX_FORMAT_VERSION,
            "dimension": self.dimension,
            "m": self.m,
            "ef_construction": self.ef_construction,
            "seed": self.seed,
            "entry": self._entry,
            "max_level": self._max_level,
            "ids": self._ids,
            "levels": self._levels,
            "links": self._links,
            "vectors": [row.tolist() for row in self._vectors],
        }
        Path(path).write_text(
            json.dumps(payload, ensure_ascii=False, sort_keys=True, separators=(",", ":")) + "\n",
            encoding="utf-8",
        )

    @classmethod
    def load(cls, path: str | Path) -> "HnswIndex":
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise CorruptSnapshot(f"{path}: {exc}") from exc
        if not isinstance(payload, dict) or "format_version" not in payload:
            raise CorruptSnapshot(f"{path}: missing format_version")
        if payload["format_version"] != INDEX_FORMAT_VERSION:
            raise VersionMismatch(
                f"{path}: format_version {payload['format_version']} != {INDEX_FORMAT_VERSION}"
            )
        try:
            index = cls(
                dimension=payload["dimension"],
                m=payload["m"],
                ef_construction=payload["ef_construction"],
                seed=payload["seed"],
            )
            index._ids = list(payload["ids"])
            index._id_to_idx = {item_id: i for i, item_id in enumerate(index._ids)}
            index._levels = list(payload["levels"])
            index._links = payload["links"]
            index._entry = payload["entry"]
            index._max_level = payload["max_level"]
            vectors = np.asarray(payload["vectors"], dtype=np.float64)
            if vectors.size == 0:
                vectors = np.zeros((0, index.dimension))
            if vectors.shape != (len(index._ids), index.dimension):
                raise CorruptSnapshot(f"{path}: vector block shape {vectors.shape}")
            index._vectors = vectors
        except (KeyError, TypeError, ValueError) as exc:
            raise CorruptSnapshot(f"{path}: {exc}") from exc
        index._frozen = True
        return index


def brute_force_knn(
    items: Mapping[str, np.ndarray] | Iterable[tuple[str, np.ndarray]],
    query: np.ndarray,
    k: int,
) -> list[tuple[str, float]]:
    """Exact scan with the same ordering rules as :meth:`HnswIndex.search`."""
    if k < 1:
        raise ValueError("k must be >= 1")
    pairs = list(items.items()) if isinstance(items, Mapping) else list(items)
    if not pairs:
        return []
    ids = [p[0] for p in pairs]
    matrix = np.asarray([p[1] for p in pairs], dtype=np.float64)
    dists = 1.0 - matrix @ np.asarray(query, dtype=np.float64)
    ranked = sorted(zip(dists.tolist(), ids))
    return [(item_id, dist) for dist, item_id in ranked[:k]]
