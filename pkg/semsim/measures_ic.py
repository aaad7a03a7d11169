"""
Information-content measures: Resnik (and its Lord alias), Lin, Jiang-Conrath.

Jiang-Conrath is a distance: 0 at identity, growing with dissimilarity.
"""
from __future__ import annotations

from .errors import UndefinedRatio
from .information_content import ICProvider, p_mis
from .taxonomy import Taxonomy


def _mis_ic(t: Taxonomy, ic: ICProvider, c1: str, c2: str) -> float:
    _, mis = p_mis(t, ic, c1, c2)
    return ic.ic_of(mis)


def sim_resnik(t: Taxonomy, ic: ICProvider, c1: str, c2: str) -> float:
    return _mis_ic(t, ic, c1, c2)


def sim_lin(t: Taxonomy, ic: ICProvider, c1: str, c2: str) -> float:
    shared = _mis_ic(t, ic, c1, c2)
    if c1 == c2:
        return 1.0
    denom = ic.ic_of(c1) + ic.ic_of(c2)
    if denom == 0:
        raise UndefinedRatio(f"lin undefined for ({c1}, {c2}): both concepts carry zero information")
    return 2.0 * shared / denom


def dist_jiang_conrath(t: Taxonomy, ic: ICProvider, c1: str, c2: str) -> float:
    return ic.ic_of(c1) + ic.ic_of(c2) - 2.0 * _mis_ic(t, ic, c1, c2)
