import itertools
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from numpy.testing import assert_allclose

from core.distributions import (
    DistributionDomainError,
    DistributionParameterError,
    SuccessVector,
    binomial_pmf_cdf,
    binomial_pmf_vector,
    poisson_binomial_pmf,
    poisson_binomial_pmf_vector,
    poisson_binomial_sf,
)


def test_binomial_degenerate_and_symmetric_cases():
    assert binomial_pmf_cdf(0, 5, 0.0) == (1.0, 1.0)
    pmf, cdf = binomial_pmf_cdf(2, 5, 0.5)
    assert_allclose(pmf, 10 / 32, atol=1e-15)
    assert_allclose(cdf, 16 / 32, atol=1e-15)
    assert binomial_pmf_cdf(5, 5, 0.3)[1] == 1.0


def test_binomial_cdf_matches_exact_fraction():
    p = Fraction(1, 20)
    exact = sum(comb(20, k) * p ** k * (1 - p) ** (20 - k) for k in range(4))
    assert_allclose(binomial_pmf_cdf(3, 20, 0.05)[1], float(exact), atol=1e-12)


@pytest.mark.parametrize("i", [-1, 6])
def test_binomial_index_outside_support(i):
    with pytest.raises(DistributionDomainError):
        binomial_pmf_cdf(i, 5, 0.5)


def test_binomial_invalid_probability():
    with pytest.raises(DistributionParameterError):
        binomial_pmf_cdf(1, 5, 1.5)


def test_binomial_vector_sums_to_one():
    assert_allclose(binomial_pmf_vector(37, 0.23).sum(), 1.0, atol=1e-12)


def test_poisson_binomial_small_cases():
    assert_allclose(poisson_binomial_pmf(1, SuccessVector.from_sequence([0.5, 0.5, 0.5])), 3 / 8, atol=1e-15)
    assert poisson_binomial_pmf(2, SuccessVector.from_sequence([1.0, 1.0, 0.0])) == 1.0


def test_poisson_binomial_matches_enumeration():
    generator = np.random.default_rng(3)
    for m in range(1, 13):
        probs = generator.uniform(size=m)
        expected = np.zeros(m + 1)
        for outcome in itertools.product((0, 1), repeat=m):
            weight = np.prod([p if bit else 1 - p for p, bit in zip(probs, outcome)])
            expected[sum(outcome)] += weight
        assert_allclose(poisson_binomial_pmf_vector(SuccessVector.from_sequence(probs)), expected, atol=1e-12)


def test_poisson_binomial_reduces_to_binomial():
    sv = SuccessVector.from_sequence([0.3] * 15)
    assert_allclose(poisson_binomial_pmf_vector(sv), binomial_pmf_vector(15, 0.3), atol=1e-13)


def test_poisson_binomial_index_and_vector_validation():
    sv = SuccessVector.from_sequence([0.2, 0.4])
    with pytest.raises(DistributionDomainError):
        poisson_binomial_pmf(3, sv)
    with pytest.raises(DistributionParameterError):
        SuccessVector.from_sequence([])
    with pytest.raises(DistributionParameterError):
        SuccessVector.from_sequence([0.2, -0.1])


def test_randomized_response_vector_layout():
    sv = SuccessVector.randomized_response(0.8, 2, 5)
    assert_allclose(sv.probs, [0.8, 0.8, 0.2, 0.2, 0.2])
    assert_allclose(poisson_binomial_sf(0, sv), 1.0)
    with pytest.raises(DistributionDomainError):
        SuccessVector.randomized_response(0.8, 6, 5)
