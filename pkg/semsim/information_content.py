"""
Concept probabilities and information content.

- corpus_ic: cumulative corpus counts (each descendant counted once, DAG-safe)
- intrinsic_ic: hyponym-count IC, 1 - ln(hypo + 1) / ln(N), values in [0, 1]
- p_mis: probability of the most informative shared subsumer
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Tuple

import pandas as pd

from .errors import (
    DegenerateTaxonomy,
    EmptyCorpus,
    InvalidParam,
    MissingICProvider,
    UnknownConcept,
    ZeroFrequencyConcept,
)
from .ontology_io import CorpusCounts
from .taxonomy import Taxonomy

logger = logging.getLogger(__name__)

CORPUS = "corpus"
INTRINSIC = "intrinsic"

# replaces a zero cumulative count when smoothing is on
SMOOTHING_COUNT = 0.5


@dataclass(frozen=True)
class ICProvider:
    kind: str
    p: Mapping[str, float]
    ic: Mapping[str, float]

    def prob(self, cid: str) -> float:
        try:
            return self.p[cid]
        except KeyError:
            raise UnknownConcept(f"no probability for concept {cid!r}") from None

    def ic_of(self, cid: str) -> float:
        try:
            return self.ic[cid]
        except KeyError:
            raise UnknownConcept(f"no information content for concept {cid!r}") from None

    @property
    def is_normalized(self) -> bool:
        return all(0.0 <= v <= 1.0 for v in self.ic.values())


def _neg_ln(p: float) -> float:
    # max() turns -0.0 at p = 1 into 0.0
    return max(0.0, -math.log(p))


def corpus_ic(t: Taxonomy, counts: CorpusCounts, smoothing: bool = False) -> ICProvider:
    total = counts.total
    if total <= 0:
        raise EmptyCorpus("corpus has no counts")

    cum: Dict[str, int] = {}
    for cid in t.concept_ids:
        cum[cid] = counts.get(cid) + sum(counts.get(d) for d in t.descendants(cid))

    root_mass = cum[t.root]
    zeros = sorted(cid for cid, n in cum.items() if n == 0)
    if zeros and not smoothing:
        shown = ", ".join(zeros[:5])
        raise ZeroFrequencyConcept(f"{len(zeros)} concept(s) with zero cumulative count ({shown})")

    p: Dict[str, float] = {}
    for cid, n in cum.items():
        p[cid] = (n if n > 0 else SMOOTHING_COUNT) / root_mass
    if zeros:
        logger.info("smoothed %d zero-frequency concepts", len(zeros))

    ic = {cid: _neg_ln(v) for cid, v in p.items()}
    return ICProvider(CORPUS, MappingProxyType(p), MappingProxyType(ic))


def intrinsic_ic(t: Taxonomy) -> ICProvider:
    n = len(t)
    if n < 2:
        raise DegenerateTaxonomy("intrinsic IC needs at least 2 concepts (ln 1 = 0)")
    log_n = math.log(n)

    ic: Dict[str, float] = {}
    p: Dict[str, float] = {}
    for cid in t.concept_ids:
        value = 1.0 - math.log(t.hyponym_count(cid) + 1) / log_n
        value = min(1.0, max(0.0, value))
        ic[cid] = value
        p[cid] = math.exp(-value)
    return ICProvider(INTRINSIC, MappingProxyType(p), MappingProxyType(ic))


def p_mis(t: Taxonomy, ic: ICProvider, c1: str, c2: str) -> Tuple[float, str]:
    shared = t.common_subsumers(c1, c2)
    best = min(shared, key=lambda a: (ic.prob(a), a))
    return ic.prob(best), best


def ic_table(t: Taxonomy, provider: ICProvider) -> pd.DataFrame:
    rows = [
        {
            "concept": cid,
            "depth": t.depth(cid),
            "hyponyms": t.hyponym_count(cid),
            "p": provider.prob(cid),
            "ic": provider.ic_of(cid),
        }
        for cid in t.concept_ids
    ]
    df = pd.DataFrame(rows, columns=["concept", "depth", "hyponyms", "p", "ic"])
    return df.sort_values(["depth", "concept"]).reset_index(drop=True)


def make_provider(
    t: Taxonomy, kind: Optional[str], counts: Optional[CorpusCounts] = None, smoothing: bool = False
) -> Optional[ICProvider]:
    """Provider for an IC kind name ('corpus', 'intrinsic', or 'none' / None)."""
    if kind in (None, "", "none"):
        return None
    if kind == INTRINSIC:
        return intrinsic_ic(t)
    if kind == CORPUS:
        if counts is None:
            raise MissingICProvider("corpus IC needs corpus counts")
        return corpus_ic(t, counts, smoothing=smoothing)
    raise InvalidParam(f"unknown IC kind {kind!r} (corpus | intrinsic | none)")
