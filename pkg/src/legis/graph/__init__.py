from legis.graph.snapshot import (
    FORMAT_VERSION,
    load_snapshot,
    save_snapshot,
    snapshot_bytes,
    snapshot_payload,
    store_from_payload,
)
from legis.graph.store import (
    EDGE_ABROGATES,
    EDGE_CITES,
    EDGE_CONTAINS,
    KIND_ARTICLE,
    KIND_LAW,
    EdgeRecord,
    GraphStore,
    NodeRecord,
    text_digest,
)

__all__ = [
    "EDGE_ABROGATES",
    "EDGE_CITES",
    "EDGE_CONTAINS",
    "EdgeRecord",
    "FORMAT_VERSION",
    "GraphStore",
    "KIND_ARTICLE",
    "KIND_LAW",
    "NodeRecord",
    "load_snapshot",
    "save_snapshot",
    "snapshot_bytes",
    "snapshot_payload",
    "store_from_payload",
    "text_digest",
]
