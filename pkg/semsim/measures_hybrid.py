"""
Hybrid measures mixing hierarchy position with other evidence.

- sim_knappe: weighted overlap of generalization (ancestor) sets
- sim_zhou: blend of a normalized path term and a normalized IC-distance term
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateTaxonomy, InvalidParam, UnnormalizedIC
from .information_content import ICProvider, p_mis
from .taxonomy import Taxonomy


@dataclass(frozen=True)
class HybridParams:
    knappe_p: float = 0.5
    zhou_k: float = 0.5

    def __post_init__(self) -> None:
        for name in ("knappe_p", "zhou_k"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise InvalidParam(f"{name} must be in [0, 1], got {v}")


DEFAULT_HYBRID_PARAMS = HybridParams()


def sim_knappe(t: Taxonomy, c1: str, c2: str, p: float = 0.5) -> float:
    if not 0.0 <= p <= 1.0:
        raise InvalidParam(f"knappe p must be in [0, 1], got {p}")
    a1 = t.ancestors_or_self(c1)
    a2 = t.ancestors_or_self(c2)
    shared = len(a1 & a2)
    return p * shared / len(a1) + (1.0 - p) * shared / len(a2)


def sim_zhou(t: Taxonomy, ic: ICProvider, c1: str, c2: str, k: float = 0.5) -> float:
    if not 0.0 <= k <= 1.0:
        raise InvalidParam(f"zhou k must be in [0, 1], got {k}")
    _, d_nodes = t.deep_max()
    if d_nodes < 2:
        raise DegenerateTaxonomy("zhou needs a taxonomy at least 2 nodes deep")
    if not ic.is_normalized:
        raise UnnormalizedIC(f"zhou needs information content in [0, 1]; the {ic.kind} provider is not normalized")

    length = t.shortest_path(c1, c2).edge_length
    path_term = math.log(length + 1) / math.log(2 * (d_nodes - 1))

    _, lso = p_mis(t, ic, c1, c2)
    ic_term = (ic.ic_of(c1) + ic.ic_of(c2) - 2.0 * ic.ic_of(lso)) / 2.0

    score = 1.0 - k * path_term - (1.0 - k) * ic_term
    # the path term alone can pass 1 on shallow, wide taxonomies
    return min(1.0, max(0.0, score))
