"""Tests for the randomized identity suites."""

import numpy as np
import pytest

from octoeigen.core.octonion import DEFAULT_TABLE
from octoeigen.core.properties import (
    SUITES,
    PropertyReport,
    alternativity_deviation,
    associator_antisymmetry_deviation,
    characteristic_deviation,
    conjugation_deviation,
    dot_scaling_deviation,
    dot_transfer_deviation,
    gram_associator_deviation,
    norm_product_deviation,
    projector_identity_deviation,
    reduced_count,
    run_property_suite,
)


class TestDeviations:
    """Each measure stays at roundoff level on the default table."""

    @pytest.mark.parametrize(
        "measure",
        [
            dot_transfer_deviation,
            dot_scaling_deviation,
            norm_product_deviation,
            alternativity_deviation,
            conjugation_deviation,
            associator_antisymmetry_deviation,
        ],
    )
    def test_octonion_identities(self, measure, rng):
        assert measure(rng, 500) <= 1e-12

    def test_characteristic_identity(self, rng):
        assert characteristic_deviation(rng, 10) <= 1e-10

    def test_vector_identities(self, rng):
        assert gram_associator_deviation(rng, 20) <= 1e-12
        assert projector_identity_deviation(rng, 20) <= 1e-12

    def test_empty_batch(self, rng):
        assert dot_transfer_deviation(rng, 0) == 0.0


class TestRunPropertySuite:
    def test_report_shape(self):
        report = run_property_suite(20, seed=3)
        assert isinstance(report, PropertyReport)
        assert [result.name for result in report.results] == [name for name, *_ in SUITES]
        assert report.passed
        assert report.table_convention == DEFAULT_TABLE.describe()

    def test_sample_counts(self):
        report = run_property_suite(25, seed=0)
        counts = {result.name: result.samples for result in report.results}
        assert counts["algebra.dot_transfer"] == 25
        assert counts["jordan.power_associativity"] == 2
        assert counts["theorem.gram_associator"] == 2

    def test_deterministic(self):
        first = run_property_suite(10, seed=42)
        second = run_property_suite(10, seed=42)
        assert first.model_dump_json() == second.model_dump_json()

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError, match="at least 1"):
            run_property_suite(0, seed=0)

    @pytest.mark.parametrize("trials,expected", [(1, 1), (9, 1), (10, 1), (10_000, 1_000)])
    def test_reduced_count(self, trials, expected):
        assert reduced_count(trials) == expected

    def test_failure_is_reported(self, mocker):
        mocker.patch(
            "octoeigen.core.properties.SUITES",
            (("algebra.broken", lambda rng, count, table: 1.0, 1e-12, False),),
        )
        report = run_property_suite(5, seed=0)
        assert not report.passed
        assert report.results[0].max_deviation == 1.0

    @pytest.mark.slow
    def test_full_run(self):
        report = run_property_suite(10_000, seed=42)
        assert report.passed, [result.name for result in report.results if not result.passed]
        assert np.isfinite([result.max_deviation for result in report.results]).all()
