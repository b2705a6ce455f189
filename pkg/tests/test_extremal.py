"""Extremal reports and the registered theorem checkers."""

import math

import pytest

from algconn import (
    canonical_form,
    class_members,
    extremal_mu,
    mu_value,
    theorem_ids,
    verify_theorem,
)
from algconn.errors import EmptyClassError, GraphError
from algconn.extremal import GraphClass, claimed_family
from algconn.families import FamilySpec, build_family


def fam(fid, *params):
    return build_family(FamilySpec(fid, params))


class TestExtremalMu:
    def test_max_over_pendant_class_is_one(self):
        report = extremal_mu(GraphClass("H_nk", 6, k=2), "max")
        assert abs(report.optimum - 1.0) < 1e-9
        assert canonical_form(fam("p_n_k", 6, 2)) in report.extremizers
        assert report.class_size == len(list(class_members(GraphClass("H_nk", 6, k=2))))

    def test_min_over_single_pendant_class(self):
        report = extremal_mu(GraphClass("H_nk", 6, k=1), "min")
        assert report.unique
        assert report.extremizers == (canonical_form(fam("c3_tail", 6)),)
        assert report.claimed_value == pytest.approx(report.optimum, abs=1e-12)

    def test_unicyclic_max_tie_at_six(self):
        report = extremal_mu(GraphClass("U_n", 6), "max")
        assert not report.unique
        assert set(report.extremizers) == {
            canonical_form(fam("cycle", 6)),
            canonical_form(fam("p_n_k", 6, 3)),
        }
        assert abs(report.optimum - 1.0) < 1e-9

    def test_empty_class_raises(self):
        with pytest.raises(EmptyClassError):
            extremal_mu(GraphClass("H_nk", 3, k=1), "max")

    def test_bad_objective(self):
        with pytest.raises(GraphError):
            extremal_mu(GraphClass("U_n", 5), "median")

    def test_deterministic_across_runs(self):
        a = extremal_mu(GraphClass("T_nk", 8, k=3), "max")
        b = extremal_mu(GraphClass("T_nk", 8, k=3), "max")
        assert a.extremizers == b.extremizers
        assert a.optimum == b.optimum

    def test_workers_do_not_change_report(self):
        base = extremal_mu(GraphClass("U_n", 7), "min", workers=1)
        multi = extremal_mu(GraphClass("U_n", 7), "min", workers=2)
        assert base.extremizers == multi.extremizers
        assert base.optimum == multi.optimum
        assert base.class_size == multi.class_size

    def test_claimed_family_registry(self):
        spec = claimed_family(GraphClass("H_nk", 7, k=3), "min")
        assert spec == FamilySpec("t_kld", (2, 1, 4))
        spec = claimed_family(GraphClass("U_n", 9), "max")
        assert spec == FamilySpec("p_n_k", (9, 6))
        assert claimed_family(GraphClass("Trees_diam", 8, d=4), "max") == FamilySpec(
            "t_broom", (8, 5)
        )


class TestVerifyTheorem:
    def test_ids_are_registered(self):
        ids = theorem_ids()
        for tid in (
            "THM_4_2",
            "THM_4_3",
            "THM_4_4",
            "THM_4_5",
            "THM_4_7",
            "PROP_2_1",
            "PROP_2_2",
            "PROP_2_3",
            "THM_3_5",
            "LEMMA_5_1",
            "THM_5_2",
            "THM_6_1",
            "THM_6_2",
            "LEMMA_1_1",
            "LEMMA_1_2",
            "COR_3_2",
            "LEMMA_3_1",
            "LEMMA_3_4",
            "REMARK_4_3",
        ):
            assert tid in ids

    def test_unknown_id(self):
        with pytest.raises(GraphError):
            verify_theorem("THM_9_9", 4, 5)

    def test_min_class_checker_passes(self):
        assert verify_theorem("THM_4_4", 4, 7).status == "pass"

    def test_range_below_domain_is_vacuous(self):
        assert verify_theorem("THM_4_4", 1, 3).status == "vacuous"

    def test_specific_k(self):
        report = verify_theorem("THM_4_5", 6, 6, k=3)
        assert report.status == "pass"
        assert len(report.cases) == 1

    def test_unicyclic_min_includes_value_table(self):
        report = verify_theorem("THM_6_2", 5, 5)
        assert report.status == "pass"
        labels = [c.label for c in report.cases]
        assert "n=5 table" in labels

    def test_lemma_5_1_range(self):
        assert verify_theorem("LEMMA_5_1", 6, 24).status == "pass"

    def test_diameter_max_tie_is_detected(self):
        # Exact tie: with diameter 4 fixed, every spider whose legs have at
        # most two edges and at least two full-length legs hits the same
        # connectivity 2(1-cos(pi/5)), so the claimed broom is not unique.
        report = verify_theorem("PROP_2_2", 7, 7)
        failing = [c for c in report.cases if c.status == "fail"]
        assert [c.label for c in failing] == ["n=7,diam=4"]
        spider = fam("t_spider", 7, 3)
        broom = fam("t_broom", 7, 5)
        assert abs(mu_value(spider) - mu_value(broom)) < 1e-15
        assert abs(mu_value(spider) - 2 * (1 - math.cos(math.pi / 5))) < 1e-12

    def test_diameter_max_odd_diameters_pass(self):
        report = verify_theorem("PROP_2_2", 6, 6)
        by_label = {c.label: c.status for c in report.cases}
        assert by_label["n=6,diam=3"] == "pass"
        assert by_label["n=6,diam=5"] == "pass"

    def test_grafting_checker(self):
        assert verify_theorem("PROP_2_3", 4, 6).status == "pass"

    def test_pendant_fan_checker(self):
        assert verify_theorem("THM_3_5", 4, 6).status == "pass"

    def test_monotonicity_checkers(self):
        assert verify_theorem("LEMMA_1_1", 4, 6).status == "pass"
        assert verify_theorem("LEMMA_1_2", 4, 6).status == "pass"

    def test_perron_value_checkers(self):
        assert verify_theorem("LEMMA_3_1", 4, 6).status == "pass"
        assert verify_theorem("LEMMA_3_4", 4, 6).status == "pass"
        assert verify_theorem("COR_3_2", 4, 6).status == "pass"

    def test_bad_range(self):
        with pytest.raises(GraphError):
            verify_theorem("THM_4_4", 6, 4)
