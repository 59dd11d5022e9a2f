import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.integrate import quad
from scipy.stats import norm

from core.distributions import DistributionParameterError, normal_laplace_cdf, normal_laplace_cdf_closed


def convolution_oracle(t, sigma, b):
    """∫ f_Laplace(y) Φ((t - y)/σ) dy, partido en la moda."""
    def integrand(y):
        return 0.5 / b * math.exp(-abs(y) / b) * norm.cdf((t - y) / sigma)
    left, _ = quad(integrand, -np.inf, 0.0, epsabs=1e-12)
    right, _ = quad(integrand, 0.0, np.inf, epsabs=1e-12)
    return left + right


def test_center_is_half():
    assert normal_laplace_cdf(0.0, 2.0, 3.0) == 0.5


def test_negligible_laplace_reduces_to_normal():
    assert_allclose(normal_laplace_cdf(1.96, 1.0, 1e-9), norm.cdf(1.96), atol=1e-8)


def test_matches_convolution_and_closed_form():
    assert_allclose(normal_laplace_cdf(1.5, 2.0, 3.0), convolution_oracle(1.5, 2.0, 3.0), atol=1e-8)
    assert_allclose(normal_laplace_cdf(1.5, 2.0, 3.0), normal_laplace_cdf_closed(1.5, 2.0, 3.0), atol=1e-8)


@pytest.mark.parametrize("sigma,b", [(1.0, 0.01), (1.0, 1.0), (2.0, 3.0), (0.5, 40.0), (100.0, 1e4)])
def test_closed_form_agrees_with_quadrature(sigma, b):
    for t in np.linspace(-4, 4, 17) * max(sigma, b):
        assert_allclose(normal_laplace_cdf_closed(t, sigma, b), normal_laplace_cdf(t, sigma, b), atol=1e-8)


def test_symmetry_and_monotonicity():
    grid = np.linspace(-12, 12, 97)
    values = np.array([normal_laplace_cdf(t, 1.3, 2.1) for t in grid])
    mirrored = np.array([normal_laplace_cdf(-t, 1.3, 2.1) for t in grid])
    assert_allclose(values + mirrored, 1.0, atol=1e-14)
    assert np.all(np.diff(values) >= -1e-12)


@pytest.mark.parametrize("sigma,b", [(0.0, 1.0), (1.0, 0.0), (-1.0, 2.0)])
def test_nonpositive_scales_rejected(sigma, b):
    with pytest.raises(DistributionParameterError):
        normal_laplace_cdf(1.0, sigma, b)
