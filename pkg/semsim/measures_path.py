"""
Edge-counting measures over the is-a hierarchy.

All scores are "higher = closer". Paths are restricted to up-then-down is-a
routes through one common subsumer (see Taxonomy.shortest_path).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParam
from .taxonomy import Taxonomy


@dataclass(frozen=True)
class PathMeasureParams:
    hso_c: float = 8.0
    hso_k: float = 1.0
    li_alpha: float = 0.2
    li_beta: float = 0.6

    def __post_init__(self) -> None:
        if self.hso_c <= 0 or self.hso_k <= 0:
            raise InvalidParam("hso_c and hso_k must be positive")
        if self.li_alpha < 0 or self.li_beta < 0:
            raise InvalidParam("li_alpha and li_beta must be >= 0")


DEFAULT_PATH_PARAMS = PathMeasureParams()


def sim_shortest_path(t: Taxonomy, c1: str, c2: str) -> float:
    max_edges, _ = t.deep_max()
    sp = t.shortest_path(c1, c2).edge_length
    return float(2 * max_edges - sp)


def link_weight(t: Taxonomy, parent: str, child: str) -> float:
    """Weight of the is-a link parent -> child: lighter deeper down and under busier parents."""
    return 1.0 / (t.depth(child) * len(t.children(parent)))


def weighted_distance(t: Taxonomy, c1: str, c2: str) -> float:
    route = t.route(c1, c2)
    total = 0.0
    for a, b in zip(route, route[1:]):
        # each hop is either child -> parent or parent -> child
        if b in t.ancestors_or_self(a):
            total += link_weight(t, parent=b, child=a)
        else:
            total += link_weight(t, parent=a, child=b)
    return total


def sim_weighted_links(t: Taxonomy, c1: str, c2: str) -> float:
    return 1.0 / (1.0 + weighted_distance(t, c1, c2))


def sim_hso(t: Taxonomy, c1: str, c2: str, params: PathMeasureParams = DEFAULT_PATH_PARAMS) -> float:
    path = t.shortest_path(c1, c2)
    score = params.hso_c - path.edge_length - params.hso_k * path.direction_changes
    return float(max(0.0, score))


def sim_wu_palmer(t: Taxonomy, c1: str, c2: str) -> float:
    info = t.lcs(c1, c2)
    denom = info.n1 + info.n2 + 2 * info.n
    if denom == 0:
        # c1 = c2 = root
        return 1.0
    return 2.0 * info.n / denom


def tbk_penalty(t: Taxonomy, c1: str, c2: str) -> float:
    info = t.lcs(c1, c2)
    if info.n1 == 0 or info.n2 == 0:
        return 1.0
    return 1.0 / (1 + min(info.n1, info.n2))


def sim_tbk(t: Taxonomy, c1: str, c2: str) -> float:
    return sim_wu_palmer(t, c1, c2) * tbk_penalty(t, c1, c2)


def sim_li(t: Taxonomy, c1: str, c2: str, params: PathMeasureParams = DEFAULT_PATH_PARAMS) -> float:
    sp = t.shortest_path(c1, c2).edge_length
    n = t.lcs(c1, c2).n
    # (e^bN - e^-bN) / (e^bN + e^-bN) is tanh(bN)
    return math.exp(-params.li_alpha * sp) * math.tanh(params.li_beta * n)


def sim_leacock_chodorow(t: Taxonomy, c1: str, c2: str) -> float:
    _, d_nodes = t.deep_max()
    length = t.shortest_path(c1, c2).node_length
    return -math.log(length / (2.0 * d_nodes))
