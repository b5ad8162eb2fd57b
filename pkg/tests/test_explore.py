import math

import numpy as np
import pytest

import arcbounds as ab
from arcbounds.errors import DomainError, SingularFamilyError
from arcbounds.explore import LOG_SPACE_ALPHA, Verdict, classify_family, generalized_ratio, scan_grid
from arcbounds.grids import SCAN_GRID, GridSpec


class TestGeneralizedRatio:
    def test_reduces_to_family_slice(self):
        for x in (0.01, 0.3, 0.5, 0.9, 0.999):
            assert generalized_ratio(0.5, 0.5, ab.TWO_SQRT2, x) == pytest.approx(
                ab.bound_ratio(ab.TWO_SQRT2, x), rel=1e-14
            )

    def test_reduces_to_arccos(self):
        for x in (0.1, 0.5, 0.9):
            assert generalized_ratio(0.0, 0.0, 0.0, x) == pytest.approx(ab.arccos_stable(x), rel=1e-15)

    def test_frozen_value(self):
        assert generalized_ratio(0.5, 0.5, 0.0, 0.5) == pytest.approx(1.8137993642342179, rel=1e-14)

    def test_singular_scalar(self):
        with pytest.raises(SingularFamilyError):
            generalized_ratio(0.5, 0.5, -math.sqrt(1.5), 0.5)

    def test_domain(self):
        with pytest.raises(DomainError):
            generalized_ratio(0.5, 0.5, 1.0, 1.0)
        with pytest.raises(DomainError):
            generalized_ratio(math.inf, 0.5, 1.0, 0.5)


class TestClassifyFamily:
    def test_slice_verdicts(self):
        assert classify_family(0.5, 0.5, 0.0).verdict is Verdict.INCREASING
        assert classify_family(0.5, 0.5, ab.A_STAR).verdict is Verdict.INCREASING
        assert classify_family(0.5, 0.5, 2.5).verdict is Verdict.INCREASING
        assert classify_family(0.5, 0.5, ab.TWO_SQRT2).verdict is Verdict.DECREASING

    def test_plain_arccos_is_decreasing(self):
        assert classify_family(0.0, 0.0, 0.0).verdict is Verdict.DECREASING

    def test_interior_minimum_witnesses(self):
        result = classify_family(0.5, 0.5, 2.7)
        assert result.verdict is Verdict.NON_MONOTONE
        x0 = ab.find_minimum(2.7).x0
        assert result.witness_down < x0 < result.witness_up
        assert result.margin > 1e-12

    def test_undetermined_on_flat_slice(self):
        # two samples so close that the difference hides below the sign
        # threshold
        result = classify_family(0.5, 0.5, 0.0, GridSpec(0.5 - 1e-14, 0.5 + 1e-14, 2, "uniform"))
        assert result.verdict is Verdict.UNDETERMINED
        assert math.isnan(result.evidence_x)

    def test_negative_numerator_family(self):
        # gamma = -3, beta = 0 gives a constant negative numerator, so the
        # family is a negative multiple of arccos: increasing
        result = classify_family(0.0, 0.0, -3.0)
        assert result.verdict is Verdict.INCREASING

    def test_log_space_consistency(self):
        direct = classify_family(LOG_SPACE_ALPHA - 0.25, 0.5, 1.0)
        logged = classify_family(LOG_SPACE_ALPHA + 0.25, 0.5, 1.0)
        assert direct.verdict is Verdict.INCREASING
        assert logged.verdict is Verdict.INCREASING

    def test_log_space_negative_numerator(self):
        direct = classify_family(9.0, 0.0, -3.0)
        logged = classify_family(12.0, 0.0, -3.0)
        assert direct.verdict is logged.verdict is Verdict.DECREASING

    def test_large_alpha_no_overflow(self):
        result = classify_family(60.0, 0.5, 1.0)
        assert result.verdict is Verdict.INCREASING

    def test_note_marks_evidence(self):
        result = classify_family(0.5, 0.5, 0.0)
        assert "evidence" in result.note
        assert "evidence" in result.to_dict()["note"]


class TestScanGrid:
    def test_slice_row(self):
        results = scan_grid([0.5], [0.5], [0.0, ab.A_STAR, 2.5, ab.TWO_SQRT2])
        verdicts = [r.verdict for r in results]
        assert verdicts == [Verdict.INCREASING, Verdict.INCREASING, Verdict.INCREASING, Verdict.DECREASING]

    def test_row_major_order(self):
        results = scan_grid([0.0, 0.5], [0.0, 0.5], [0.0, 1.0], GridSpec(1e-4, 1.0 - 1e-4, 501, "uniform"))
        triples = [(r.alpha, r.beta, r.gamma) for r in results]
        assert triples == [
            (0.0, 0.0, 0.0), (0.0, 0.0, 1.0), (0.0, 0.5, 0.0), (0.0, 0.5, 1.0),
            (0.5, 0.0, 0.0), (0.5, 0.0, 1.0), (0.5, 0.5, 0.0), (0.5, 0.5, 1.0),
        ]

    def test_singular_triple_recorded_not_fatal(self):
        gammas = [-1.2, 0.0, 1.0]
        results = scan_grid([0.5], [0.5], gammas, GridSpec(1e-4, 1.0 - 1e-4, 501, "uniform"))
        assert len(results) == 3
        bad = results[0]
        assert bad.verdict is Verdict.ERROR
        assert "vanishes" in bad.error
        assert math.isnan(bad.margin)
        assert all(r.verdict is not Verdict.ERROR for r in results[1:])

    def test_three_cubed_smoke(self):
        results = scan_grid(
            [0.25, 0.5, 1.0],
            [0.0, 0.5, 1.0],
            [-1.2, 0.5, 3.0],
            GridSpec(1e-4, 1.0 - 1e-4, 501, "uniform"),
        )
        assert len(results) == 27
        assert any(r.verdict is Verdict.ERROR for r in results)

    def test_determinism(self):
        g = GridSpec(1e-4, 1.0 - 1e-4, 501, "uniform")
        first = [r.to_dict() for r in scan_grid([0.5], [0.5], [0.0, 2.7], g)]
        second = [r.to_dict() for r in scan_grid([0.5], [0.5], [0.0, 2.7], g)]
        assert first == second


def test_verdict_stability_under_density_doubling():
    coarse = GridSpec(1e-6, 1.0 - 1e-6, 10_001, "uniform")
    fine = GridSpec(1e-6, 1.0 - 1e-6, 20_001, "uniform")
    for gamma in (-0.5, 0.0, 1.0, 2.5, 2.7, 2.75, 3.0, 4.0):
        v1 = classify_family(0.5, 0.5, gamma, coarse).verdict
        v2 = classify_family(0.5, 0.5, gamma, fine).verdict
        if v1 in (Verdict.INCREASING, Verdict.DECREASING, Verdict.NON_MONOTONE):
            assert v2 is v1, gamma
