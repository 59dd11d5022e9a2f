import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.integrate import quad
from scipy.stats import kstest

from core.distributions import DistributionDomainError, TulapParams, tulap_cdf, tulap_pdf, tulap_sample
from core.tot_engine import (
    PrivateCount,
    ToTConfigurationError,
    binomial_tulap_cdf,
    binomial_tulap_sf,
    private_binomial_pvalue,
    privatize_count,
    privatize_counts,
)

from .conftest import mc_band


def test_huge_budget_keeps_count(rng):
    for _ in range(200):
        assert abs(privatize_count(3, 5, 50.0, rng).z - 3.0) <= 0.5


@pytest.mark.parametrize("a", [-1, 6])
def test_count_outside_range(a, rng):
    with pytest.raises(DistributionDomainError):
        privatize_count(a, 5, 1.0, rng)


def test_release_follows_tulap(rng):
    draws = np.array([privatize_count(5, 10, 1.0, rng).z for _ in range(5000)])
    params = TulapParams.from_epsilon(1.0, location=5.0)
    assert kstest(draws, lambda x: tulap_cdf(x, params)).pvalue > 1e-3


def test_vectorised_release_follows_tulap(rng):
    counts = np.tile([0, 4, 10], 3000)
    z = privatize_counts(counts, 10, 1.0, rng)
    assert z.shape == counts.shape
    noise = TulapParams.from_epsilon(1.0)
    assert kstest(z - counts, lambda x: tulap_cdf(x, noise)).pvalue > 1e-3
    with pytest.raises(DistributionDomainError):
        privatize_counts(np.array([2, 11]), 10, 1.0, rng)


def test_pvalue_far_left_is_one():
    assert_allclose(private_binomial_pvalue(PrivateCount(-100.0, 10, 1.0), 0.05), 1.0, atol=1e-6)


def test_single_subset_against_integration():
    # P(B + N >= 1/2) con B ~ Bernoulli(1/2) es 1/2 por simetría
    assert_allclose(private_binomial_pvalue(PrivateCount(0.5, 1, 1.0), 0.5), 0.5, atol=1e-12)
    params = TulapParams.from_epsilon(1.0)
    breaks = [k + 0.5 for k in range(-40, 40)]
    oracle = 0.0
    for successes, weight in ((0, 0.7), (1, 0.3)):
        lower = 0.2 - successes
        points = [p for p in breaks if lower < p < 60]
        mass, _ = quad(lambda x: tulap_pdf(x, params), lower, 60, points=points, limit=400, epsabs=1e-13)
        oracle += weight * mass
    assert_allclose(private_binomial_pvalue(PrivateCount(0.2, 1, 1.0), 0.3), oracle, atol=1e-8)


def test_pvalue_strictly_decreasing():
    grid = np.linspace(-3, 13, 161)
    p_values = binomial_tulap_sf(grid, 10, 0.05, 1.0)
    assert np.all(np.diff(p_values) < 0)
    assert np.all((p_values >= 0) & (p_values <= 1))


def test_cdf_and_survival_are_complementary():
    grid = np.linspace(-4, 14, 91)
    assert_allclose(binomial_tulap_cdf(grid, 10, 0.2, 0.7) + binomial_tulap_sf(grid, 10, 0.2, 0.7), 1.0, atol=1e-10)


def test_exact_level_under_null(rng):
    replicates = 100_000
    counts = rng.binomial(10, 0.05, size=replicates)
    z = counts + tulap_sample(TulapParams.from_epsilon(1.0), rng, size=replicates)
    rate = float(np.mean(binomial_tulap_sf(z, 10, 0.05, 1.0) < 0.05))
    assert rate <= 0.05 + mc_band(0.05, replicates)
    assert abs(rate - 0.05) <= mc_band(0.05, replicates)


@pytest.mark.parametrize("alpha0", [0.0, 1.0, 1.5])
def test_alpha0_outside_open_interval(alpha0):
    with pytest.raises(ToTConfigurationError):
        private_binomial_pvalue(PrivateCount(1.0, 5, 1.0), alpha0)


def test_private_count_validation():
    with pytest.raises(ToTConfigurationError):
        PrivateCount(1.0, 0, 1.0)
    with pytest.raises(ToTConfigurationError):
        PrivateCount(1.0, 3, -math.inf)
