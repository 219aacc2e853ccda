"""Relation suite driver: reports, determinism, error paths, sensitivity."""

import json

import pytest

from blockalg import blockpoly
from blockalg.cpoly import CPoly
from blockalg.verify import (
    SUITE_NAMES,
    SuiteBoundsError,
    UnknownSuiteError,
    VerifyConfig,
    full_report,
    run_suite,
)


class TestRunSuite:
    def test_unknown_name(self):
        with pytest.raises(UnknownSuiteError):
            run_suite("not_a_suite")

    def test_bounds_guard(self):
        with pytest.raises(SuiteBoundsError):
            run_suite("duality", max_weight=40)
        with pytest.raises(SuiteBoundsError):
            run_suite("duality", max_block_degree=9)

    def test_small_bounds_still_enumerate(self):
        rep = run_suite("duality", max_weight=3, max_block_degree=1)
        assert rep.status == "pass"
        assert rep.instances_checked == 1

    def test_block_shuffle_counts_pairs(self):
        # weight <= 8, degree <= 2: generators 3, 5, 7 with one split each,
        # ordered pairs (3,3), (3,5), (5,3) with two splits each
        rep = run_suite("block_shuffle", max_weight=8, max_block_degree=2)
        assert rep.status == "pass"
        assert rep.instances_checked == 3 * 1 + 3 * 2

    def test_freeness_reports_cells(self):
        rep = run_suite("freeness", max_weight=15, max_block_degree=3)
        assert rep.status == "pass"
        notes = "\n".join(rep.engine_notes)
        assert "cell (weight 8, block degree 2): rank 1, expected 1" in notes
        assert "cell (weight 13, block degree 3): rank 2, expected 2" in notes

    def test_ihara_consistency_records_signs(self):
        rep = run_suite("ihara_consistency", max_weight=7)
        assert rep.status == "pass"
        assert any("global sign" in note for note in rep.engine_notes)


class TestReports:
    def test_deterministic_serialization(self):
        a = run_suite("coaction_grading", max_weight=6)
        b = run_suite("coaction_grading", max_weight=6)
        assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(
            b.to_dict(), sort_keys=True
        )

    def test_full_report_default_names(self):
        reports = full_report(
            VerifyConfig(max_weight=5, max_block_degree=1, suites=("duality", "depth_support"))
        )
        assert [r.relation_name for r in reports] == ["duality", "depth_support"]

    def test_full_report_rejects_unknown(self):
        with pytest.raises(UnknownSuiteError):
            full_report(VerifyConfig(suites=("duality", "bogus")))

    def test_report_schema(self):
        rep = run_suite("parity_endpoint", max_weight=6)
        data = rep.to_dict()
        assert set(data) == {
            "relation_name",
            "parameters",
            "instances_checked",
            "status",
            "failures",
            "engine_notes",
        }
        assert data["status"] == "pass"
        assert data["failures"] == []

    def test_kernel_membership_small(self):
        rep = run_suite("kernel_membership", max_weight=9, max_block_degree=2)
        assert rep.status == "pass"

    def test_full_report_default_is_complete(self):
        reports = full_report()
        assert [r.relation_name for r in reports] == list(SUITE_NAMES)
        assert all(r.status == "pass" for r in reports)
        assert all(r.instances_checked > 0 for r in reports)

    def test_full_report_degenerate_bounds(self):
        reports = full_report(VerifyConfig(max_weight=3, max_block_degree=1))
        assert len(reports) == len(SUITE_NAMES)
        assert all(r.status == "pass" for r in reports)
        assert all(r.instances_checked > 0 for r in reports)


def _flip_coefficient(poly: CPoly, exps: tuple[int, ...]) -> CPoly:
    c = poly.coeff(exps)
    assert c != 0
    return poly + CPoly.monomial(exps, -2 * c, nvars=poly.nvars)


class TestMutationSensitivity:
    @pytest.mark.parametrize("slot", [(1, 6), (3, 4), (5, 2)])
    def test_flipped_coefficient_is_caught(self, monkeypatch, slot):
        original = blockpoly.half_generator

        def mutated(k):
            q = original(k)
            if k == 2:
                q = _flip_coefficient(q, slot)
            return q

        monkeypatch.setattr(blockpoly, "half_generator", mutated)
        failing = []
        for name in ("block_shuffle", "cyclic_insertion", "cyclic_invariance",
                     "differential", "ihara_consistency"):
            rep = run_suite(name, max_weight=9, max_block_degree=2)
            if rep.status == "fail":
                failing.append((name, rep))
        assert failing, f"no suite caught the mutated coefficient at {slot}"
        name, rep = failing[0]
        payload = rep.failures[0]
        assert payload["input"]
        if payload["polynomial"] is not None:
            assert not CPoly.from_dict(payload["polynomial"]).is_zero()
