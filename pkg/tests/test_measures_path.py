import math

import pytest

from semsim.errors import InvalidParam
from semsim.measures_path import (
    PathMeasureParams,
    link_weight,
    sim_hso,
    sim_leacock_chodorow,
    sim_li,
    sim_shortest_path,
    sim_tbk,
    sim_weighted_links,
    sim_wu_palmer,
    tbk_penalty,
    weighted_distance,
)


class TestShortestPathScore:
    def test_worked_values(self, fix1):
        assert sim_shortest_path(fix1, "fever", "diarrhea") == 6.0
        assert sim_shortest_path(fix1, "fever", "fever") == 10.0
        assert sim_shortest_path(fix1, "fever", "mesh") == 5.0

    def test_never_negative(self, fix1):
        for a in fix1.concept_ids:
            for b in fix1.concept_ids:
                assert sim_shortest_path(fix1, a, b) >= 0


class TestWeightedLinks:
    def test_single_link(self, fix1):
        assert link_weight(fix1, "body_temp_changes", "fever") == pytest.approx(0.2)
        assert sim_weighted_links(fix1, "fever", "body_temp_changes") == pytest.approx(1 / 1.2)

    def test_busy_parent_weighs_less(self, fix1):
        assert link_weight(fix1, "signs_and_symptoms", "body_temp_changes") == pytest.approx(0.125)

    def test_route_sum(self, fix1):
        assert weighted_distance(fix1, "fever", "diarrhea") == pytest.approx(0.65)
        assert sim_weighted_links(fix1, "fever", "diarrhea") == pytest.approx(1 / 1.65)

    def test_identity(self, fix1):
        assert sim_weighted_links(fix1, "x2", "x2") == 1.0


class TestHso:
    def test_worked_values(self, fix1):
        assert sim_hso(fix1, "fever", "diarrhea") == 3.0
        assert sim_hso(fix1, "fever", "fever") == 8.0

    def test_straight_route_has_no_turn_penalty(self, fix1):
        # five edges straight up
        assert sim_hso(fix1, "fever", "mesh") == 3.0

    def test_clamped_at_zero(self, fix1):
        params = PathMeasureParams(hso_c=2.0)
        assert sim_hso(fix1, "fever", "diarrhea", params) == 0.0

    @pytest.mark.parametrize("kwargs", [{"hso_c": 0}, {"hso_k": -1}, {"li_alpha": -0.1}, {"li_beta": -1}])
    def test_invalid_params(self, kwargs):
        with pytest.raises(InvalidParam):
            PathMeasureParams(**kwargs)


class TestWuPalmerAndTbk:
    def test_worked_value(self, fix1):
        assert sim_wu_palmer(fix1, "fever", "diarrhea") == pytest.approx(0.6)

    def test_root_pair(self, fix1):
        assert sim_wu_palmer(fix1, "mesh", "mesh") == 1.0
        assert sim_wu_palmer(fix1, "fever", "mesh") == 0.0

    def test_neighbourhood_inversion(self, fix2):
        assert sim_wu_palmer(fix2, "A", "D") == pytest.approx(8 / 11)
        assert sim_wu_palmer(fix2, "A", "B") == pytest.approx(0.75)
        assert sim_wu_palmer(fix2, "A", "D") < sim_wu_palmer(fix2, "A", "B")

    def test_tbk_restores_order(self, fix2):
        assert tbk_penalty(fix2, "A", "D") == 1.0
        assert tbk_penalty(fix2, "A", "B") == 0.5
        assert sim_tbk(fix2, "A", "D") == pytest.approx(8 / 11)
        assert sim_tbk(fix2, "A", "B") == pytest.approx(0.375)
        assert sim_tbk(fix2, "A", "D") > sim_tbk(fix2, "A", "B")

    def test_tbk_never_above_wup(self, fix1):
        for a in fix1.concept_ids:
            for b in fix1.concept_ids:
                assert sim_tbk(fix1, a, b) <= sim_wu_palmer(fix1, a, b)


class TestLi:
    def test_worked_values(self, fix1):
        assert sim_li(fix1, "fever", "diarrhea") == pytest.approx(math.exp(-0.8) * math.tanh(1.8))
        assert sim_li(fix1, "fever", "diarrhea") == pytest.approx(0.4254, abs=1e-4)
        assert sim_li(fix1, "fever", "fever") == pytest.approx(math.tanh(3.0))

    def test_root_scores_zero(self, fix1):
        assert sim_li(fix1, "mesh", "fever") == 0.0

    def test_custom_params(self, fix1):
        params = PathMeasureParams(li_alpha=0.0, li_beta=1.0)
        assert sim_li(fix1, "fever", "diarrhea", params) == pytest.approx(math.tanh(3.0))


class TestLeacockChodorow:
    def test_worked_values(self, fix1):
        assert sim_leacock_chodorow(fix1, "fever", "diarrhea") == pytest.approx(-math.log(5 / 12))
        assert sim_leacock_chodorow(fix1, "fever", "fever") == pytest.approx(math.log(12))
        assert sim_leacock_chodorow(fix1, "fever", "mesh") == pytest.approx(math.log(2))

    def test_positive(self, fix1):
        for a in fix1.concept_ids:
            for b in fix1.concept_ids:
                assert sim_leacock_chodorow(fix1, a, b) > 0
