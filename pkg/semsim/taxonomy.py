"""
Taxonomy model: an immutable rooted DAG of concepts linked by is-a edges (plus
optional part-of edges).

build_taxonomy() validates the input and precomputes everything the measures
query repeatedly:
- depth table (minimum is-a edge count from the root)
- ancestor closure with upward chain lengths
- strict descendant sets (hyponym counts)
- word -> concept index (case-folded synonyms)

After construction nothing mutates, so a Taxonomy can be shared between threads.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import (
    CycleDetected,
    DuplicateEdge,
    DuplicateId,
    InvalidConcept,
    MultipleRoots,
    NoRoot,
    UnknownConcept,
    UnknownEndpoint,
)

logger = logging.getLogger(__name__)

Edge = Tuple[str, str]

# separates synonyms and feature terms in the native file format
LIST_SEPARATOR = "|"


def fold(word: str) -> str:
    return str(word).strip().casefold()


def _fold_set(words: Optional[Iterable[str]]) -> FrozenSet[str]:
    if not words:
        return frozenset()
    return frozenset(fold(w) for w in words if w is not None and str(w).strip())


@dataclass(frozen=True)
class Concept:
    id: str
    synonyms: FrozenSet[str] = field(default_factory=frozenset)
    gloss_terms: FrozenSet[str] = field(default_factory=frozenset)
    feature_terms: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        cid = self.id
        if not isinstance(cid, str) or not cid or any(ch.isspace() for ch in cid):
            raise InvalidConcept(f"concept id must be a non-empty token without whitespace: {cid!r}")
        if LIST_SEPARATOR in cid:
            raise InvalidConcept(f"concept id must not contain {LIST_SEPARATOR!r}: {cid!r}")
        # the id always names its own concept
        object.__setattr__(self, "synonyms", _fold_set(self.synonyms) | {fold(cid)})
        object.__setattr__(self, "gloss_terms", _fold_set(self.gloss_terms))
        object.__setattr__(self, "feature_terms", _fold_set(self.feature_terms))
        for kind in ("synonyms", "feature_terms"):
            bad = sorted(w for w in getattr(self, kind) if LIST_SEPARATOR in w)
            if bad:
                raise InvalidConcept(f"{cid}: {kind} must not contain {LIST_SEPARATOR!r}: {bad[0]!r}")
        spaced = sorted(w for w in self.gloss_terms if any(ch.isspace() for ch in w))
        if spaced:
            raise InvalidConcept(f"{cid}: gloss terms are single words, got {spaced[0]!r}")


@dataclass(frozen=True)
class LcsInfo:
    lcs: str
    n: int
    n1: int
    n2: int


@dataclass(frozen=True)
class PathInfo:
    edge_length: int
    node_length: int
    direction_changes: int
    via: str


class Taxonomy:
    """Validated, immutable taxonomy. Build it with build_taxonomy()."""

    def __init__(
        self,
        concepts: Mapping[str, Concept],
        isa_edges: FrozenSet[Edge],
        partof_edges: FrozenSet[Edge],
        root: str,
        up: nx.DiGraph,
        parts: nx.DiGraph,
    ) -> None:
        self._concepts: Dict[str, Concept] = dict(concepts)
        self._isa = isa_edges
        self._partof = partof_edges
        self._root = root
        self._up = up
        self._parts = parts

        down = up.reverse(copy=True)
        self._depth: Dict[str, int] = dict(nx.single_source_shortest_path_length(down, root))

        self._up_dist: Dict[str, Dict[str, int]] = {}
        self._ancestors: Dict[str, FrozenSet[str]] = {}
        descendants: Dict[str, set] = {cid: set() for cid in self._concepts}
        for cid in self._concepts:
            dist = dict(nx.single_source_shortest_path_length(up, cid))
            self._up_dist[cid] = dist
            self._ancestors[cid] = frozenset(dist)
            for anc in dist:
                if anc != cid:
                    descendants[anc].add(cid)
        self._descendants: Dict[str, FrozenSet[str]] = {k: frozenset(v) for k, v in descendants.items()}

        words: Dict[str, set] = {}
        for cid, c in self._concepts.items():
            for w in c.synonyms:
                words.setdefault(w, set()).add(cid)
        self._words: Dict[str, FrozenSet[str]] = {k: frozenset(v) for k, v in words.items()}

        max_depth = max(self._depth.values()) if self._depth else 0
        self._deep_max = (max_depth, max_depth + 1)

    # ---- structure ----

    @property
    def root(self) -> str:
        return self._root

    @property
    def concepts(self) -> Mapping[str, Concept]:
        return dict(self._concepts)

    @property
    def concept_ids(self) -> List[str]:
        return sorted(self._concepts)

    @property
    def isa_edges(self) -> FrozenSet[Edge]:
        return self._isa

    @property
    def partof_edges(self) -> FrozenSet[Edge]:
        return self._partof

    def __len__(self) -> int:
        return len(self._concepts)

    def __contains__(self, cid: object) -> bool:
        return cid in self._concepts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Taxonomy):
            return NotImplemented
        return (
            self._root == other._root
            and self._concepts == other._concepts
            and self._isa == other._isa
            and self._partof == other._partof
        )

    def __hash__(self) -> int:
        return hash((self._root, self._isa, self._partof, frozenset(self._concepts.values())))

    def __repr__(self) -> str:
        return (
            f"Taxonomy(root={self._root!r}, concepts={len(self._concepts)}, "
            f"isa={len(self._isa)}, partof={len(self._partof)})"
        )

    def _check(self, cid: str) -> str:
        if cid not in self._concepts:
            raise UnknownConcept(f"unknown concept: {cid!r}")
        return cid

    def concept(self, cid: str) -> Concept:
        return self._concepts[self._check(cid)]

    def parents(self, cid: str) -> List[str]:
        return sorted(self._up.successors(self._check(cid)))

    def children(self, cid: str) -> List[str]:
        return sorted(self._up.predecessors(self._check(cid)))

    def part_neighbors(self, cid: str) -> List[str]:
        """Wholes this concept is part of, and parts it has."""
        self._check(cid)
        if cid not in self._parts:
            return []
        return sorted(set(self._parts.successors(cid)) | set(self._parts.predecessors(cid)))

    def descendants(self, cid: str) -> FrozenSet[str]:
        return self._descendants[self._check(cid)]

    def up_distances(self, cid: str) -> Mapping[str, int]:
        """Shortest upward chain length from cid to each of its ancestors (self included)."""
        return dict(self._up_dist[self._check(cid)])

    def to_networkx(self) -> nx.DiGraph:
        """Copy of the is-a graph, edges child -> parent."""
        return self._up.copy()

    # ---- queries used by the measures ----

    def depth(self, cid: str) -> int:
        return self._depth[self._check(cid)]

    def ancestors_or_self(self, cid: str) -> FrozenSet[str]:
        return self._ancestors[self._check(cid)]

    def common_subsumers(self, c1: str, c2: str) -> FrozenSet[str]:
        return self.ancestors_or_self(c1) & self.ancestors_or_self(c2)

    def lcs(self, c1: str, c2: str) -> LcsInfo:
        common = self.common_subsumers(c1, c2)
        best = min(common, key=lambda a: (-self._depth[a], a))
        return LcsInfo(
            lcs=best,
            n=self._depth[best],
            n1=self._up_dist[c1][best],
            n2=self._up_dist[c2][best],
        )

    def shortest_path(self, c1: str, c2: str) -> PathInfo:
        common = self.common_subsumers(c1, c2)
        d1, d2 = self._up_dist[c1], self._up_dist[c2]
        # routes through an endpoint carry no direction change and win ties
        via = min(common, key=lambda a: (d1[a] + d2[a], a not in (c1, c2), a))
        length = d1[via] + d2[via]
        turns = 0 if via in (c1, c2) else 1
        return PathInfo(edge_length=length, node_length=length + 1, direction_changes=turns, via=via)

    def route(self, c1: str, c2: str) -> List[str]:
        """Concept sequence of the shortest_path route: c1 up to the subsumer, down to c2."""
        via = self.shortest_path(c1, c2).via
        up_leg = nx.shortest_path(self._up, c1, via)
        down_leg = nx.shortest_path(self._up, c2, via)
        return list(up_leg) + list(reversed(down_leg[:-1]))

    def hyponym_count(self, cid: str) -> int:
        return len(self.descendants(cid))

    def deep_max(self) -> Tuple[int, int]:
        return self._deep_max

    def resolve_word(self, word: str) -> FrozenSet[str]:
        return self._words.get(fold(word), frozenset())


# =======================
# Construction
# =======================

def _edge_list(edges: Optional[Iterable[Sequence[str]]], kind: str, ids: Mapping[str, Concept]) -> FrozenSet[Edge]:
    seen: set = set()
    for e in edges or ():
        a, b = str(e[0]), str(e[1])
        for endpoint in (a, b):
            if endpoint not in ids:
                raise UnknownEndpoint(f"{kind} edge ({a}, {b}) references undeclared concept {endpoint!r}")
        if a == b:
            raise CycleDetected(f"{kind} self-loop on {a!r}")
        if (a, b) in seen:
            raise DuplicateEdge(f"duplicate {kind} edge ({a}, {b})")
        seen.add((a, b))
    return frozenset(seen)


def build_taxonomy(
    concepts: Iterable[Concept],
    isa: Optional[Iterable[Sequence[str]]] = None,
    partof: Optional[Iterable[Sequence[str]]] = None,
) -> Taxonomy:
    by_id: Dict[str, Concept] = {}
    for c in concepts:
        if c.id in by_id:
            raise DuplicateId(f"duplicate concept id {c.id!r}")
        by_id[c.id] = c

    isa_edges = _edge_list(isa, "isa", by_id)
    partof_edges = _edge_list(partof, "partof", by_id)

    if not by_id:
        raise NoRoot("taxonomy has no concepts")

    up = nx.DiGraph()
    up.add_nodes_from(sorted(by_id))
    up.add_edges_from(sorted(isa_edges))

    if not nx.is_directed_acyclic_graph(up):
        cycle = nx.find_cycle(up)
        chain = " -> ".join([u for u, _ in cycle] + [cycle[0][0]])
        raise CycleDetected(f"is-a cycle: {chain}")

    roots = [n for n in up.nodes if up.out_degree(n) == 0]
    if not roots:
        raise NoRoot("no concept without an is-a parent")
    if len(roots) > 1:
        shown = ", ".join(sorted(roots)[:10])
        raise MultipleRoots(f"{len(roots)} roots found ({shown}); use @virtual-root to join them")

    parts = nx.DiGraph()
    parts.add_edges_from(sorted(partof_edges))

    t = Taxonomy(by_id, isa_edges, partof_edges, roots[0], up, parts)
    logger.debug("built %r", t)
    return t


# =======================
# Operations
# =======================

def depth(t: Taxonomy, c: str) -> int:
    return t.depth(c)


def ancestors_or_self(t: Taxonomy, c: str) -> FrozenSet[str]:
    return t.ancestors_or_self(c)


def lcs(t: Taxonomy, c1: str, c2: str) -> LcsInfo:
    return t.lcs(c1, c2)


def shortest_path(t: Taxonomy, c1: str, c2: str) -> PathInfo:
    return t.shortest_path(c1, c2)


def hyponym_count(t: Taxonomy, c: str) -> int:
    return t.hyponym_count(c)


def deep_max(t: Taxonomy) -> Tuple[int, int]:
    return t.deep_max()


def resolve_word(t: Taxonomy, word: str) -> FrozenSet[str]:
    return t.resolve_word(word)
