"""Whole-graph snapshot persistence.

A snapshot is a versioned JSON document with node and edge arrays sorted by
stable keys, so saving the same graph always yields the same bytes and
``load(save(g))`` equals ``g``.
"""

from __future__ import annotations

import json
from datetime import date
from pathlib import Path

from legis.errors import CorruptSnapshot, VersionMismatch
from legis.graph.store import EdgeRecord, GraphStore, NodeRecord

FORMAT_VERSION = 1

_DATE_PROPERTIES = ("publication_date", "effective_date")


def _encode_properties(properties: dict) -> dict:
    encoded = {}
    for key, value in properties.items():
        if value is None:
            continue
        if isinstance(value, date):
            value = value.isoformat()
        encoded[key] = value
    return encoded


def _decode_properties(properties: dict) -> dict:
    decoded = dict(properties)
    for key in _DATE_PROPERTIES:
        if key in decoded and isinstance(decoded[key], str):
            decoded[key] = date.fromisoformat(decoded[key])
    return decoded


def snapshot_payload(store: GraphStore) -> dict:
    nodes = sorted(store.nodes(), key=lambda n: n.node_id)
    edges = sorted(store.edges(), key=lambda e: e.key)
    return {
        "format_version": FORMAT_VERSION,
        "nodes": [
            {"node_id": n.node_id, "kind": n.kind, "properties": _encode_properties(n.properties)}
            for n in nodes
        ],
        "edges": [
            {"src": e.src, "dst": e.dst, "kind": e.kind, "properties": _encode_properties(e.properties)}
            for e in edges
        ],
    }


def snapshot_bytes(store: GraphStore) -> bytes:
    return (
        json.dumps(snapshot_payload(store), ensure_ascii=False, sort_keys=True, separators=(",", ":"))
        + "\n"
    ).encode("utf-8")


def save_snapshot(store: GraphStore, path: str | Path) -> None:
    Path(path).write_bytes(snapshot_bytes(store))


def load_snapshot(path: str | Path) -> GraphStore:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CorruptSnapshot(f"{path}: {exc}") from exc
    return store_from_payload(payload, origin=str(path))


def store_from_payload(payload: dict, origin: str = "<payload>") -> GraphStore:
    if not isinstance(payload, dict) or "format_version" not in payload:
        raise CorruptSnapshot(f"{origin}: missing format_version")
    if payload["format_version"] != FORMAT_VERSION:
        raise VersionMismatch(
            f"{origin}: format_version {payload['format_version']} != {FORMAT_VERSION}"
        )
    store = GraphStore()
    try:
        for raw in payload["nodes"]:
            node = NodeRecord(
                node_id=raw["node_id"], kind=raw["kind"], properties=_decode_properties(raw["properties"])
            )
            store._nodes[node.node_id] = node
            store._out.setdefault(node.node_id, set())
            store._in.setdefault(node.node_id, set())
        for raw in payload["edges"]:
            edge = EdgeRecord(
                src=raw["src"], dst=raw["dst"], kind=raw["kind"], properties=_decode_properties(raw["properties"])
            )
            if edge.src not in store._nodes or edge.dst not in store._nodes:
                raise CorruptSnapshot(f"{origin}: edge {edge.key} references a missing node")
            store._edges[edge.key] = edge
            store._out[edge.src].add(edge.key)
            store._in[edge.dst].add(edge.key)
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptSnapshot(f"{origin}: {exc}") from exc
    return store
