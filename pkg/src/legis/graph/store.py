"""In-memory property graph of laws, articles, and typed relationships.

Nodes are laws and articles keyed by canonical URI; edges are CONTAINS
(law to article), CITES (carrying the reference kind), and ABROGATES
(law to law, dated). The store is mutable during ingestion and becomes an
immutable shared snapshot after :meth:`GraphStore.freeze`.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from datetime import date

from legis.errors import FrozenStateError, KindMismatch, NodeNotFound
from legis.ingest.models import LawDocument

KIND_LAW = "Law"
KIND_ARTICLE = "Article"

EDGE_CONTAINS = "CONTAINS"
EDGE_CITES = "CITES"
EDGE_ABROGATES = "ABROGATES"

EdgeKey = tuple[str, str, str, str]


@dataclass
class NodeRecord:
    node_id: str
    kind: str
    properties: dict = field(default_factory=dict)


@dataclass
class EdgeRecord:
    src: str
    dst: str
    kind: str
    properties: dict = field(default_factory=dict)

    @property
    def key(self) -> EdgeKey:
        return (self.src, self.dst, self.kind, self.properties.get("ref_kind") or "")


def text_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


class GraphStore:
    def __init__(self) -> None:
        self._nodes: dict[str, NodeRecord] = {}
        self._edges: dict[EdgeKey, EdgeRecord] = {}
        self._out: dict[str, set[EdgeKey]] = {}
        self._in: dict[str, set[EdgeKey]] = {}
        self._frozen = False

    # --- lifecycle -------------------------------------------------------

    @property
    def frozen(self) -> bool:
        return self._frozen

    def freeze(self) -> None:
        self._frozen = True

    def _check_mutable(self) -> None:
        if self._frozen:
            raise FrozenStateError("graph is frozen; reload to mutate")

    # --- basic access ------------------------------------------------------

    def __len__(self) -> int:
        return len(self._nodes)

    def node(self, node_id: str) -> NodeRecord:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise NodeNotFound(node_id) from None

    def has_node(self, node_id: str) -> bool:
        return node_id in self._nodes

    def nodes(self) -> list[NodeRecord]:
        return list(self._nodes.values())

    def edges(self, kind: str | None = None) -> list[EdgeRecord]:
        return [e for e in self._edges.values() if kind is None or e.kind == kind]

    def node_count(self) -> int:
        return len(self._nodes)

    def edge_count(self) -> int:
        return len(self._edges)

    def laws(self, include_stubs: bool = False) -> list[NodeRecord]:
        return [
            n
            for n in self._nodes.values()
            if n.kind == KIND_LAW and (include_stubs or not n.properties.get("stub"))
        ]

    def is_stub(self, node_id: str) -> bool:
        return bool(self.node(node_id).properties.get("stub"))

    def articles_of(self, law_id: str) -> list[str]:
        return sorted(
            e.dst for e in self._edges_out(law_id) if e.kind == EDGE_CONTAINS
        )

    def owning_law(self, unit_id: str) -> str:
        """Law a unit belongs to: the parent of an article, else itself."""
        node = self.node(unit_id)
        if node.kind == KIND_ARTICLE:
            for e in self._edges_in(unit_id):
                if e.kind == EDGE_CONTAINS:
                    return e.src
        return unit_id

    def _edges_out(self, node_id: str) -> list[EdgeRecord]:
        return [self._edges[k] for k in sorted(self._out.get(node_id, ()))]

    def _edges_in(self, node_id: str) -> list[EdgeRecord]:
        return [self._edges[k] for k in sorted(self._in.get(node_id, ()))]

    # --- mutation ----------------------------------------------------------

    def _put_node(self, node_id: str, kind: str, properties: dict) -> None:
        self._nodes[node_id] = NodeRecord(node_id=node_id, kind=kind, properties=properties)
        self._out.setdefault(node_id, set())
        self._in.setdefault(node_id, set())

    def _ensure_stub(self, node_id: str) -> None:
        if node_id not in self._nodes:
            self._put_node(node_id, KIND_LAW, {"stub": True})

    def _add_edge(self, src: str, dst: str, kind: str, properties: dict) -> None:
        edge = EdgeRecord(src=src, dst=dst, kind=kind, properties=properties)
        existing = self._edges.get(edge.key)
        if existing is not None and kind == EDGE_CITES:
            # Same reference from the same unit: keep the stronger specificity.
            existing.properties["specifies_paragraph"] = bool(
                existing.properties.get("specifies_paragraph")
                or properties.get("specifies_paragraph")
            )
            return
        self._edges[edge.key] = edge
        self._out.setdefault(src, set()).add(edge.key)
        self._in.setdefault(dst, set()).add(edge.key)

    def _remove_edge(self, key: EdgeKey) -> None:
        edge = self._edges.pop(key, None)
        if edge is None:
            return
        self._out.get(edge.src, set()).discard(key)
        self._in.get(edge.dst, set()).discard(key)

    def upsert_law(self, doc: LawDocument) -> str:
        """Insert or replace a law with its articles and reference edges.

        Cited targets missing from the graph become stub law nodes; a stub
        that later gets ingested for real loses its stub flag here.
        """
        self._check_mutable()
        law_id = doc.law_id

        old_articles = []
        if law_id in self._nodes:
            old_articles = self.articles_of(law_id)
            for unit in (law_id, *old_articles):
                for key in list(self._out.get(unit, ())):
                    self._remove_edge(key)
            for art in old_articles:
                if not self._in.get(art) and not self._out.get(art):
                    self._nodes.pop(art, None)

        self._put_node(
            law_id,
            KIND_LAW,
            {
                "title": doc.title,
                "publication_date": doc.publication_date,
                "ministry_domain": doc.ministry_domain,
                "text_digest": text_digest(doc.full_text),
                "stub": False,
            },
        )
        for article in doc.articles:
            self._put_node(
                article.article_id,
                KIND_ARTICLE,
                {"title": article.heading, "text_digest": text_digest(article.text), "stub": False},
            )
            self._add_edge(law_id, article.article_id, EDGE_CONTAINS, {})
        for ref in (*doc.preamble_refs, *doc.body_refs):
            self._ensure_stub(ref.target_uri)
            self._add_edge(
                ref.source_unit,
                ref.target_uri,
                EDGE_CITES,
                {"ref_kind": ref.kind, "specifies_paragraph": ref.specifies_paragraph},
            )
        return law_id

    def add_abrogation(self, src: str, dst: str, effective_date: date) -> None:
        self._check_mutable()
        for node_id in (src, dst):
            node = self.node(node_id)
            if node.kind != KIND_LAW:
                raise KindMismatch(f"{node_id} is {node.kind}, expected {KIND_LAW}")
        self._add_edge(src, dst, EDGE_ABROGATES, {"effective_date": effective_date})

    # --- queries -----------------------------------------------------------

    def in_force_laws(self, as_of: date) -> set[str]:
        """Laws published on or before ``as_of`` and not yet abrogated then."""
        result: set[str] = set()
        for node in self._nodes.values():
            if node.kind != KIND_LAW or node.properties.get("stub"):
                continue
            published = node.properties.get("publication_date")
            if published is None or published > as_of:
                continue
            abrogated = any(
                e.kind == EDGE_ABROGATES and e.properties["effective_date"] <= as_of
                for e in self._edges_in(node.node_id)
            )
            if not abrogated:
                result.add(node.node_id)
        return result

    def outgoing_refs(self, node_id: str, ref_kind: str | None = None) -> list[EdgeRecord]:
        """CITES edges leaving a law (including its articles) or one article."""
        node = self.node(node_id)
        units = [node_id]
        if node.kind == KIND_LAW:
            units.extend(self.articles_of(node_id))
        edges = [
            e
            for unit in units
            for e in self._edges_out(unit)
            if e.kind == EDGE_CITES
            and (ref_kind is None or e.properties.get("ref_kind") == ref_kind)
        ]
        edges.sort(key=lambda e: e.key)
        return edges

    def top_cited(
        self,
        ref_kind: str | None = None,
        within: set[str] | None = None,
        k: int = 10,
    ) -> list[tuple[str, int]]:
        """Targets ranked by number of distinct citing laws.

        ``within`` restricts the citing side to the given law ids. Ties are
        broken by target id ascending.
        """
        if k < 1:
            raise ValueError("k must be >= 1")
        citing: dict[str, set[str]] = {}
        for edge in self._edges.values():
            if edge.kind != EDGE_CITES:
                continue
            if ref_kind is not None and edge.properties.get("ref_kind") != ref_kind:
                continue
            law = self.owning_law(edge.src)
            if within is not None and law not in within:
                continue
            citing.setdefault(edge.dst, set()).add(law)
        ranked = sorted(((t, len(s)) for t, s in citing.items()), key=lambda x: (-x[1], x[0]))
        return ranked[:k]
