import numpy as np
import pytest

from semsim.errors import BothSetsEmpty, ComponentUndefined, InvalidParam
from semsim.measures_feature import (
    ANCESTOR_TAG,
    ISA,
    PARTOF,
    FeatureParams,
    concept_features,
    jaccard,
    neighborhood_terms,
    neighbors,
    rodriguez_components,
    sim_rodriguez,
    sim_tversky,
    sim_xsimilarity,
    xsim_components,
)
from semsim.taxonomy import Concept, build_taxonomy


@pytest.fixture(scope="module")
def xsim_tax():
    concepts = [
        Concept("w"),
        Concept("p", gloss_terms=frozenset({"s", "a1", "a2", "a3", "a4"})),
        Concept("q", gloss_terms=frozenset({"s", "b1", "b2", "b3", "b4", "b5"})),
        Concept("x"),
        Concept("y"),
        Concept("z"),
        Concept("m"),
        Concept("o"),
    ]
    isa = [("p", "w"), ("q", "w"), ("x", "p"), ("y", "q"), ("z", "q"), ("m", "w"), ("o", "w")]
    partof = [("p", "m"), ("q", "m"), ("o", "q")]
    return build_taxonomy(concepts, isa, partof)


def _house_ontology(kids, synonym):
    concepts = [
        Concept("building"),
        Concept("house", synonyms=frozenset({synonym}), feature_terms=frozenset({"roof", "door"})),
    ] + [Concept(k) for k in kids]
    isa = [("house", "building")] + [(k, "house") for k in kids]
    return build_taxonomy(concepts, isa)


@pytest.fixture(scope="module")
def house_p():
    return _house_ontology(["cottage", "villa"], "dwelling")


@pytest.fixture(scope="module")
def house_q():
    return _house_ontology(["mansion", "hut"], "home")


class TestTversky:
    def test_symmetric_at_half(self):
        assert sim_tversky({"a", "b"}, {"a", "c"}) == pytest.approx(0.5)
        assert sim_tversky({"a", "b", "c"}, {"b", "c", "d"}) == pytest.approx(2 / 3)
        assert sim_tversky({"a", "b"}, {"b", "a"}, alpha=0.9) == 1.0

    def test_alpha_weights_first_difference(self):
        big, small = {"a", "b", "c"}, {"a"}
        assert sim_tversky(big, small, alpha=1.0) == pytest.approx(1 / 3)
        assert sim_tversky(big, small, alpha=0.0) == 1.0

    def test_duality(self):
        rng = np.random.default_rng(5)
        pool = [f"t{i}" for i in range(8)]
        for _ in range(200):
            a = set(rng.choice(pool, size=int(rng.integers(1, 6)), replace=False).tolist())
            b = set(rng.choice(pool, size=int(rng.integers(1, 6)), replace=False).tolist())
            alpha = float(rng.random())
            assert sim_tversky(a, b, alpha) == pytest.approx(sim_tversky(b, a, 1 - alpha))

    def test_disjoint_and_one_empty(self):
        assert sim_tversky({"a"}, {"b"}) == 0.0
        assert sim_tversky({"a"}, set()) == 0.0

    def test_both_empty(self):
        with pytest.raises(BothSetsEmpty):
            sim_tversky(set(), set())

    def test_bad_alpha(self):
        with pytest.raises(InvalidParam):
            sim_tversky({"a"}, {"a"}, alpha=1.5)

    def test_concept_features(self, fix1):
        feats = concept_features(fix1, "fever")
        assert {"fever", "pyrexia", "symptom", "thermal"} <= feats
        assert ANCESTOR_TAG + "mesh" in feats
        assert ANCESTOR_TAG + "fever" not in feats
        assert len(feats) == 9

    def test_concept_level_score(self, fix1):
        a = concept_features(fix1, "fever")
        b = concept_features(fix1, "diarrhea")
        assert sim_tversky(a, b) == pytest.approx(5 / 8.5)


class TestJaccard:
    def test_values(self):
        assert jaccard({"a", "b"}, {"b", "c"}) == pytest.approx(1 / 3)
        assert jaccard(set(), set()) == 0.0


class TestNeighbors:
    def test_isa_and_partof(self, xsim_tax):
        assert neighbors(xsim_tax, "p", ISA) == ("w", "x")
        assert neighbors(xsim_tax, "q", PARTOF) == ("m", "o")

    def test_unknown_relation(self, xsim_tax):
        with pytest.raises(InvalidParam):
            neighbors(xsim_tax, "p", "hasColor")

    def test_terms_union_synonyms(self, fix1):
        assert neighborhood_terms(fix1, "body_temp_changes") == {
            "signs_and_symptoms",
            "signs and symptoms",
            "fever",
            "pyrexia",
        }


class TestXSimilarity:
    def test_components(self, xsim_tax):
        parts = xsim_components(xsim_tax, "p", "q")
        assert parts.synsets == 0.0
        assert parts.isa == pytest.approx(0.25)
        assert parts.partof == pytest.approx(0.5)
        assert parts.descr == pytest.approx(0.1)
        assert parts.neighb == pytest.approx(0.5)
        assert sim_xsimilarity(xsim_tax, "p", "q") == pytest.approx(0.5)

    def test_shared_synonym_scores_one(self):
        t = build_taxonomy(
            [Concept("r"), Concept("car", frozenset({"auto"})), Concept("automobile", frozenset({"auto"}))],
            [("car", "r"), ("automobile", "r")],
        )
        assert sim_xsimilarity(t, "car", "automobile") == 1.0

    def test_identity(self, fix1):
        assert sim_xsimilarity(fix1, "diarrhea", "diarrhea") == 1.0


class TestRodriguez:
    def test_components(self, house_p, house_q):
        parts = rodriguez_components(house_p, house_q, "house", "house")
        assert parts.words == pytest.approx(0.5)
        assert parts.features == 1.0
        assert parts.neighborhoods == pytest.approx(1 / 3)
        assert parts.undefined == ()

    def test_default_weights(self, house_p, house_q):
        assert sim_rodriguez(house_p, house_q, "house", "house") == pytest.approx(11 / 18)

    def test_custom_weights(self, house_p, house_q):
        params = FeatureParams(rodriguez_weights=(0.0, 1.0, 0.0))
        assert sim_rodriguez(house_p, house_q, "house", "house", params) == 1.0

    def test_undefined_component(self, house_p, house_q):
        parts = rodriguez_components(house_p, house_q, "cottage", "hut")
        assert parts.undefined == ("features",)
        assert parts.features == 0.0
        with pytest.raises(ComponentUndefined):
            sim_rodriguez(house_p, house_q, "cottage", "hut", strict=True)

    def test_same_ontology(self, fix1):
        assert sim_rodriguez(fix1, fix1, "fever", "fever") == pytest.approx(1.0)

    @pytest.mark.parametrize("weights", [(0.5, 0.5, 0.5), (1.2, -0.2, 0.0), (0.5, 0.5)])
    def test_invalid_weights(self, weights):
        with pytest.raises(InvalidParam):
            FeatureParams(rodriguez_weights=weights)
