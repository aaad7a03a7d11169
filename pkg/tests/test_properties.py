"""Randomized checks over generated DAG taxonomies."""
import math

import networkx as nx
import numpy as np
import pytest

from semsim.information_content import intrinsic_ic
from semsim.measure_registry import DEFAULT_PARAMS, get_descriptor, measure_names, score_concepts

TOL = 1e-12

# score at c1 = c2, where it does not depend on the concept
IDENTITY = {
    "wlink": 1.0,
    "hso": 8.0,
    "wup": 1.0,
    "tbk": 1.0,
    "lin": 1.0,
    "jcn": 0.0,
    "tversky": 1.0,
    "xsim": 1.0,
    "knappe": 1.0,
    "zhou": 1.0,
}


def _random_pairs(rng, ids, n):
    idx = rng.integers(0, len(ids), size=(n, 2))
    return [(ids[int(a)], ids[int(b)]) for a, b in idx]


@pytest.fixture(scope="module")
def samples(random_taxonomy):
    rng = np.random.default_rng(2024)
    out = []
    for _ in range(20):
        t = random_taxonomy(rng, int(rng.integers(2, 61)), partof_edges=int(rng.integers(0, 5)))
        out.append((t, intrinsic_ic(t), _random_pairs(rng, t.concept_ids, 500)))
    return out


class TestMeasureProperties:
    @pytest.mark.parametrize("name", measure_names())
    def test_symmetric(self, name, samples):
        for t, ic, pairs in samples:
            for a, b in pairs:
                ab = score_concepts(t, ic, name, a, b)
                ba = score_concepts(t, ic, name, b, a)
                assert ab == pytest.approx(ba, abs=TOL)

    @pytest.mark.parametrize("name", measure_names())
    def test_within_range(self, name, samples):
        lo, hi = get_descriptor(name).range
        for t, ic, pairs in samples:
            for a, b in pairs:
                s = score_concepts(t, ic, name, a, b)
                assert s >= lo - TOL
                if hi is not None:
                    assert s <= hi + TOL

    @pytest.mark.parametrize("name", sorted(IDENTITY))
    def test_identity(self, name, samples):
        for t, ic, _ in samples:
            for c in t.concept_ids:
                assert score_concepts(t, ic, name, c, c) == pytest.approx(IDENTITY[name], abs=TOL)

    def test_depth_dependent_identities(self, samples):
        for t, ic, _ in samples:
            two_d = 2 * t.deep_max()[1]
            for c in t.concept_ids:
                assert score_concepts(t, ic, "li", c, c) == pytest.approx(math.tanh(0.6 * t.depth(c)), abs=TOL)
                assert score_concepts(t, ic, "lch", c, c) == pytest.approx(math.log(two_d), abs=TOL)

    def test_path_identity_is_maximal(self, samples):
        for t, ic, pairs in samples:
            top = 2 * t.deep_max()[0]
            for a, b in pairs:
                assert score_concepts(t, ic, "path", a, b) <= score_concepts(t, ic, "path", a, a) == top

    def test_jcn_resnik_identity(self, samples):
        for t, ic, pairs in samples:
            for a, b in pairs:
                jcn = score_concepts(t, ic, "jcn", a, b)
                res = score_concepts(t, ic, "resnik", a, b)
                assert jcn == pytest.approx(ic.ic_of(a) + ic.ic_of(b) - 2 * res, abs=1e-9)

    def test_tbk_bounded_by_wup(self, samples):
        for t, ic, pairs in samples:
            for a, b in pairs:
                assert score_concepts(t, ic, "tbk", a, b) <= score_concepts(t, ic, "wup", a, b) + TOL

    def test_wup_falls_as_the_pair_spreads(self, random_taxonomy):
        rng = np.random.default_rng(5)
        for _ in range(20):
            t = random_taxonomy(rng, int(rng.integers(3, 50)), extra_parent_prob=0.0)
            for a, b in _random_pairs(rng, t.concept_ids, 100):
                info = t.lcs(a, b)
                if a == info.lcs or info.n == 0:
                    continue
                for child in t.children(a):
                    assert t.lcs(child, b).lcs == info.lcs
                    assert score_concepts(t, None, "wup", child, b) < score_concepts(t, None, "wup", a, b)

    def test_default_params_are_used(self, samples):
        t, ic, pairs = samples[0]
        a, b = pairs[0]
        assert score_concepts(t, ic, "li", a, b) == score_concepts(t, ic, "li", a, b, DEFAULT_PARAMS)


class TestStructureAgainstNetworkx:
    def test_random_dags(self, random_taxonomy):
        rng = np.random.default_rng(99)
        for _ in range(100):
            t = random_taxonomy(rng, int(rng.integers(1, 51)), extra_parent_prob=0.35)
            up = t.to_networkx()
            down = up.reverse(copy=True)
            depths = nx.single_source_shortest_path_length(down, t.root)
            for c in t.concept_ids:
                assert t.depth(c) == depths[c]
                assert t.ancestors_or_self(c) == nx.descendants(up, c) | {c}
                assert t.hyponym_count(c) == len(nx.ancestors(up, c))
                assert t.up_distances(c) == nx.single_source_shortest_path_length(up, c)
            for a, b in _random_pairs(rng, t.concept_ids, 20):
                common = (nx.descendants(up, a) | {a}) & (nx.descendants(up, b) | {b})
                info = t.lcs(a, b)
                deepest = max(depths[x] for x in common)
                assert info.lcs == min(x for x in common if depths[x] == deepest)
                assert info.n == deepest
                assert info.n1 == nx.shortest_path_length(up, a, info.lcs)
                assert info.n2 == nx.shortest_path_length(up, b, info.lcs)
                assert t.lcs(b, a).lcs == info.lcs
                brute = min(
                    nx.shortest_path_length(up, a, x) + nx.shortest_path_length(up, b, x) for x in common
                )
                path = t.shortest_path(a, b)
                assert path.edge_length == brute
                assert path.node_length == brute + 1
                assert len(t.route(a, b)) == path.node_length

    def test_tree_triangle_bound(self, random_taxonomy):
        rng = np.random.default_rng(41)
        for _ in range(50):
            t = random_taxonomy(rng, int(rng.integers(2, 51)), extra_parent_prob=0.0)
            ids = t.concept_ids
            for _ in range(50):
                a, b, c = (ids[int(i)] for i in rng.integers(0, len(ids), size=3))
                ac = t.shortest_path(a, c).edge_length
                assert ac <= t.shortest_path(a, b).edge_length + t.shortest_path(b, c).edge_length
