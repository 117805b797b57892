"""Tests for the statistical verification helpers.

The KS statistic is cross-checked against scipy's implementation on the
same samples, and the distribution-telling-apart case (Laplace noise
against a variance-matched Gaussian reference) is checked against the
analytic supremum distance.
"""

import math

import numpy as np
import pytest
import scipy.stats

from divsamp.dist import gaussian_cdf, laplace_cdf
from divsamp.sampler import SamplerMethod, get_method
from divsamp.stats import (
    DISTINCT_COUNT_MAX_PRECISION,
    KS_CRIT_001,
    KS_CRIT_005,
    MomentSummary,
    distinct_output_count,
    empirical_cdf,
    ks_critical_value,
    ks_statistic,
    moments,
)
from divsamp.urand import BitSource


class TestKsCriticalValue:
    def test_known_levels(self):
        assert ks_critical_value(100, 0.01) == KS_CRIT_001 / 10.0
        assert ks_critical_value(10_000, 0.05) == KS_CRIT_005 / 100.0

    def test_one_percent_is_stricter(self):
        assert ks_critical_value(500, 0.01) > ks_critical_value(500, 0.05)

    def test_unsupported_level(self):
        with pytest.raises(ValueError):
            ks_critical_value(100, 0.10)

    def test_bad_count(self):
        with pytest.raises(ValueError):
            ks_critical_value(0)


class TestKsStatistic:
    def test_single_sample_at_median(self):
        assert ks_statistic([0.0], gaussian_cdf) == 0.5

    def test_two_point_hand_value(self):
        uniform_cdf = lambda x: min(max(x, 0.0), 1.0)
        assert ks_statistic([0.75, 0.25], uniform_cdf) == 0.25

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            ks_statistic([], gaussian_cdf)

    def test_matches_scipy_one_sample(self):
        rng = np.random.default_rng(501)
        xs = rng.standard_normal(2000)
        ours = ks_statistic(xs, gaussian_cdf)
        theirs = scipy.stats.kstest(xs, "norm").statistic
        assert ours == pytest.approx(theirs, abs=1e-12)

    def test_well_fitting_sample_stays_below_critical(self):
        rng = np.random.default_rng(502)
        xs = rng.random(10_000)
        uniform_cdf = lambda x: min(max(x, 0.0), 1.0)
        assert ks_statistic(xs, uniform_cdf) < ks_critical_value(10_000, 0.01)

    def test_distinguishes_laplace_from_matched_gaussian(self):
        # A variance-matched Gaussian is the closest the family gets, and
        # the analytic gap sup |F_laplace - Phi(x / sqrt 2)| is still about
        # 0.048 — far beyond the n=10^4 critical value.
        grid = np.linspace(-8.0, 8.0, 200_001)
        gap = max(abs(laplace_cdf(x) - gaussian_cdf(x / math.sqrt(2.0))) for x in grid)
        assert gap > 0.03

        rng = np.random.default_rng(503)
        xs = rng.laplace(size=10_000)
        matched = lambda x: gaussian_cdf(x / math.sqrt(2.0))
        assert ks_statistic(xs, matched) > ks_critical_value(10_000, 0.01)
        assert ks_statistic(xs, matched) == pytest.approx(gap, abs=0.02)
        assert ks_statistic(xs, laplace_cdf) < ks_critical_value(10_000, 0.01)

    def test_unsorted_input_allowed(self):
        rng = np.random.default_rng(504)
        xs = rng.standard_normal(500)
        shuffled = xs.copy()
        rng.shuffle(shuffled)
        assert ks_statistic(xs, gaussian_cdf) == ks_statistic(shuffled, gaussian_cdf)


class TestEmpiricalCdf:
    def test_step_values(self):
        cdf = empirical_cdf([3.0, 1.0, 2.0])
        assert cdf(0.5) == 0.0
        assert cdf(1.0) == pytest.approx(1 / 3)
        assert cdf(2.5) == pytest.approx(2 / 3)
        assert cdf(3.0) == 1.0
        assert cdf(99.0) == 1.0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            empirical_cdf([])

    def test_two_sample_ks_matches_scipy(self):
        rng = np.random.default_rng(505)
        xs = rng.standard_normal(800)
        ys = rng.standard_normal(1200) + 0.3
        ours = ks_statistic(xs, empirical_cdf(ys))
        theirs = scipy.stats.ks_2samp(xs, ys).statistic
        assert ours == pytest.approx(theirs, abs=1e-12)


class TestMoments:
    def test_hand_computed_example(self):
        s = moments([1.0, 2.0, 3.0, 4.0])
        assert s.count == 4
        assert s.mean == 2.5
        assert s.variance == pytest.approx(5.0 / 3.0, rel=1e-15)
        assert s.skewness == 0.0
        assert s.excess_kurtosis == pytest.approx(2.5625 / 1.5625 - 3.0, rel=1e-12)

    def test_returns_summary_type(self):
        assert isinstance(moments([0.0, 1.0, 2.0, 3.0]), MomentSummary)

    def test_gaussian_sample_moments(self):
        rng = np.random.default_rng(506)
        xs = rng.standard_normal(200_000)
        s = moments(xs)
        assert abs(s.mean) < 0.01
        assert s.variance == pytest.approx(1.0, abs=0.02)
        assert abs(s.skewness) < 0.03
        assert abs(s.excess_kurtosis) < 0.05

    def test_laplace_excess_kurtosis_near_three(self):
        rng = np.random.default_rng(507)
        s = moments(rng.laplace(size=1_000_000))
        assert 2.8 < s.excess_kurtosis < 3.2
        assert s.variance == pytest.approx(2.0, abs=0.02)

    def test_shape_moments_are_affine_invariant(self):
        rng = np.random.default_rng(508)
        xs = rng.laplace(size=5000)
        a = moments(xs)
        b = moments(3.0 * xs - 7.0)
        assert b.skewness == pytest.approx(a.skewness, abs=1e-9)
        assert b.excess_kurtosis == pytest.approx(a.excess_kurtosis, abs=1e-9)
        assert b.mean == pytest.approx(3.0 * a.mean - 7.0, abs=1e-9)
        assert b.variance == pytest.approx(9.0 * a.variance, rel=1e-9)

    def test_too_few_samples(self):
        with pytest.raises(ValueError):
            moments([1.0, 2.0, 3.0])

    def test_degenerate_sample(self):
        with pytest.raises(ValueError):
            moments([2.0, 2.0, 2.0, 2.0])


class TestDistinctOutputCount:
    def test_naive_image_is_tiny(self):
        # 2**8 grid points, numerator 0 folded onto 1: 255 reachable outputs
        count = distinct_output_count(
            get_method("naive-laplace"), 8, 20_000, BitSource(seed=601)
        )
        assert count == 255

    def test_hardened_image_blows_past_grid_size(self):
        count = distinct_output_count(
            get_method("laplace-logcos"), 8, 20_000, BitSource(seed=602)
        )
        assert count > 256

    def test_zero_signs_counted_separately(self):
        outputs = iter([0.0, -0.0, 0.0, -0.0])
        stub = SamplerMethod("stub", "laplace", "naive", 1,
                             lambda src, p: lambda: next(outputs))
        assert distinct_output_count(stub, 8, 4, BitSource(seed=0)) == 2

    def test_precision_guard(self):
        with pytest.raises(ValueError):
            distinct_output_count(
                get_method("naive-laplace"), DISTINCT_COUNT_MAX_PRECISION + 1,
                10, BitSource(seed=0),
            )

    def test_draw_count_guard(self):
        with pytest.raises(ValueError):
            distinct_output_count(get_method("naive-laplace"), 8, 0, BitSource(seed=0))
