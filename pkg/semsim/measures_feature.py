"""
Feature-based measures: Tversky ratio model, X-similarity, Rodriguez-Egenhofer.

Concepts are described by word sets (synonyms, gloss terms, feature terms) and
by the synonyms of their distance-1 neighbors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, FrozenSet, Iterable, Tuple

from .errors import BothSetsEmpty, ComponentUndefined, InvalidParam
from .taxonomy import Taxonomy

ISA = "isa"
PARTOF = "partof"

# prefix for ancestor ids inside a Tversky description set
ANCESTOR_TAG = "isa:"


@dataclass(frozen=True)
class FeatureParams:
    tversky_alpha: float = 0.5
    rodriguez_weights: Tuple[float, float, float] = (1 / 3, 1 / 3, 1 / 3)

    def __post_init__(self) -> None:
        if not 0.0 <= self.tversky_alpha <= 1.0:
            raise InvalidParam(f"tversky_alpha must be in [0, 1], got {self.tversky_alpha}")
        weights = tuple(float(w) for w in self.rodriguez_weights)
        if len(weights) != 3:
            raise InvalidParam("rodriguez_weights needs exactly three values (w_w, w_u, w_n)")
        if any(w < 0 for w in weights):
            raise InvalidParam(f"rodriguez_weights must be nonnegative, got {weights}")
        if abs(sum(weights) - 1.0) > 1e-12:
            raise InvalidParam(f"rodriguez_weights must sum to 1, got {sum(weights)}")
        object.__setattr__(self, "rodriguez_weights", weights)


DEFAULT_FEATURE_PARAMS = FeatureParams()


# =======================
# Set scores
# =======================

def sim_tversky(set1: AbstractSet[str], set2: AbstractSet[str], alpha: float = 0.5) -> float:
    if not 0.0 <= alpha <= 1.0:
        raise InvalidParam(f"alpha must be in [0, 1], got {alpha}")
    if not set1 and not set2:
        raise BothSetsEmpty("tversky needs at least one nonempty set")
    common = len(set1 & set2)
    if common == 0:
        return 0.0
    only1 = len(set1 - set2)
    only2 = len(set2 - set1)
    return common / (common + alpha * only1 + (1.0 - alpha) * only2)


def jaccard(set1: AbstractSet[str], set2: AbstractSet[str]) -> float:
    union = set1 | set2
    if not union:
        return 0.0
    return len(set1 & set2) / len(union)


# =======================
# Concept descriptions
# =======================

def concept_features(t: Taxonomy, c: str) -> FrozenSet[str]:
    """Tversky description of a concept: synonyms, feature terms and tagged strict ancestors."""
    concept = t.concept(c)
    ancestors = {ANCESTOR_TAG + a for a in t.ancestors_or_self(c) if a != c}
    return concept.synonyms | concept.feature_terms | frozenset(ancestors)


def neighbors(t: Taxonomy, c: str, relation: str) -> Tuple[str, ...]:
    if relation == ISA:
        return tuple(t.parents(c) + t.children(c))
    if relation == PARTOF:
        return tuple(t.part_neighbors(c))
    raise InvalidParam(f"unknown relation type {relation!r}")


def neighborhood_terms(t: Taxonomy, c: str, relations: Iterable[str] = (ISA, PARTOF)) -> FrozenSet[str]:
    terms: set = set()
    for rel in relations:
        for n in neighbors(t, c, rel):
            terms |= t.concept(n).synonyms
    return frozenset(terms)


# =======================
# X-similarity
# =======================

@dataclass(frozen=True)
class XSimComponents:
    synsets: float
    isa: float
    partof: float
    descr: float

    @property
    def neighb(self) -> float:
        return max(self.isa, self.partof)

    @property
    def score(self) -> float:
        if self.synsets > 0:
            return 1.0
        return max(self.neighb, self.descr)


def xsim_components(t: Taxonomy, c1: str, c2: str) -> XSimComponents:
    a, b = t.concept(c1), t.concept(c2)
    return XSimComponents(
        synsets=jaccard(a.synonyms, b.synonyms),
        isa=jaccard(neighborhood_terms(t, c1, (ISA,)), neighborhood_terms(t, c2, (ISA,))),
        partof=jaccard(neighborhood_terms(t, c1, (PARTOF,)), neighborhood_terms(t, c2, (PARTOF,))),
        descr=jaccard(a.gloss_terms, b.gloss_terms),
    )


def sim_xsimilarity(t: Taxonomy, c1: str, c2: str) -> float:
    return xsim_components(t, c1, c2).score


# =======================
# Rodriguez-Egenhofer
# =======================

@dataclass(frozen=True)
class RodriguezComponents:
    words: float
    features: float
    neighborhoods: float
    undefined: Tuple[str, ...] = ()

    def combine(self, weights: Tuple[float, float, float]) -> float:
        w_w, w_u, w_n = weights
        return w_w * self.words + w_u * self.features + w_n * self.neighborhoods


def _component(name: str, s1: AbstractSet[str], s2: AbstractSet[str], undefined: list) -> float:
    if not s1 and not s2:
        undefined.append(name)
        return 0.0
    return sim_tversky(s1, s2, 0.5)


def rodriguez_components(t_p: Taxonomy, t_q: Taxonomy, c1: str, c2: str) -> RodriguezComponents:
    a, b = t_p.concept(c1), t_q.concept(c2)
    undefined: list = []
    words = _component("words", a.synonyms, b.synonyms, undefined)
    features = _component("features", a.feature_terms, b.feature_terms, undefined)
    hoods = _component("neighborhoods", neighborhood_terms(t_p, c1), neighborhood_terms(t_q, c2), undefined)
    return RodriguezComponents(words, features, hoods, tuple(undefined))


def sim_rodriguez(
    t_p: Taxonomy,
    t_q: Taxonomy,
    c1: str,
    c2: str,
    params: FeatureParams = DEFAULT_FEATURE_PARAMS,
    strict: bool = False,
) -> float:
    """
    Weighted sum of three ratio-model scores across two ontologies.
    A component whose two sets are both empty contributes 0, or raises
    ComponentUndefined when strict.
    """
    parts = rodriguez_components(t_p, t_q, c1, c2)
    if strict and parts.undefined:
        raise ComponentUndefined(f"rodriguez components undefined for ({c1}, {c2}): {', '.join(parts.undefined)}")
    return parts.combine(params.rodriguez_weights)
