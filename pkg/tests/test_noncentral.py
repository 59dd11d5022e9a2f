import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.stats import f, ncf, ncx2, t

from core.distributions import DistributionParameterError, NoncentralParams, noncentral_cdf, noncentral_sf


def test_central_chi_square_closed_form():
    x = -2.0 * math.log(0.05)
    assert_allclose(noncentral_cdf(x, NoncentralParams.chi_square(2)), 0.95, atol=1e-12)


def test_central_f_quantile():
    x = f.ppf(0.95, 2, 27)
    assert_allclose(noncentral_cdf(x, NoncentralParams.f(2, 27)), 0.95, atol=1e-10)


def test_central_t_matches_scipy():
    assert_allclose(noncentral_cdf(1.3, NoncentralParams.t(7)), t.cdf(1.3, 7), atol=1e-14)


@pytest.mark.parametrize("df,lam,x", [(3, 4.0, 5.0), (100, 10.0, 124.3), (5, 500.0, 480.0)])
def test_noncentral_chi_square_matches_scipy(df, lam, x):
    assert_allclose(noncentral_cdf(x, NoncentralParams.chi_square(df, lam)), ncx2.cdf(x, df, lam), atol=1e-8)


@pytest.mark.parametrize("d1,d2,lam,x", [(2, 27, 6.0, 3.35), (4, 40, 1.5, 0.8), (1, 10, 20.0, 9.0)])
def test_noncentral_f_matches_scipy(d1, d2, lam, x):
    assert_allclose(noncentral_cdf(x, NoncentralParams.f(d1, d2, lam)), ncf.cdf(x, d1, d2, lam), atol=1e-8)


def test_noncentral_chi_square_against_simulation(rng):
    shift = np.array([2.0, 0.0, 0.0])
    draws = ((rng.standard_normal((200_000, 3)) + shift) ** 2).sum(axis=1)
    empirical = float(np.mean(draws <= 5.0))
    expected = noncentral_cdf(5.0, NoncentralParams.chi_square(3, 4.0))
    assert abs(empirical - expected) <= 4 * math.sqrt(expected * (1 - expected) / draws.size)


@pytest.mark.parametrize("params", [
    NoncentralParams.chi_square(4, 3.0),
    NoncentralParams.f(3, 20, 5.0),
    NoncentralParams.t(9, 1.2),
])
def test_cdf_and_sf_are_complementary(params):
    for x in (0.1, 0.9, 2.5, 7.0):
        assert_allclose(noncentral_cdf(x, params) + noncentral_sf(x, params), 1.0, atol=1e-12)


def test_monotone_in_x_and_noncentrality():
    grid = np.linspace(0.1, 30, 60)
    for lam in (0.0, 2.0, 8.0):
        values = [noncentral_cdf(x, NoncentralParams.chi_square(6, lam)) for x in grid]
        assert np.all(np.diff(values) >= -1e-14)
    at_ten = [noncentral_cdf(10.0, NoncentralParams.chi_square(6, lam)) for lam in (0.0, 1.0, 4.0, 16.0)]
    assert np.all(np.diff(at_ten) <= 1e-14)


def test_infinite_and_nonpositive_arguments():
    params = NoncentralParams.chi_square(3, 1.0)
    assert noncentral_cdf(math.inf, params) == 1.0
    assert noncentral_sf(-1.0, params) == 1.0


def test_parameter_validation():
    with pytest.raises(DistributionParameterError):
        NoncentralParams.chi_square(3, -1.0)
    with pytest.raises(DistributionParameterError):
        NoncentralParams.f(3, 0)
    with pytest.raises(DistributionParameterError):
        noncentral_cdf(float("nan"), NoncentralParams.chi_square(3))
