import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.stats import binom

from core.power import (
    PowerParameterError,
    pb_dominance_check,
    pb_level,
    pb_power,
    randomized_response_keep_probability,
)
from core.simulation import GeneratorSpec, SimPlan, estimate_rejection_rate
from core.tot_engine import ToTConfig

from .conftest import mc_band


def test_no_flipping_reduces_to_binomial_tail():
    assert_allclose(pb_power(5, 1.0, 0.05, 0.8), 0.94208, atol=1e-12)
    for theta in (0.1, 0.4, 0.7):
        assert_allclose(pb_power(9, 1.0, 0.05, theta), binom.sf(4, 9, theta), atol=1e-12)
    assert_allclose(pb_level(7, 1.0, 0.1), binom.sf(3, 7, 0.1), atol=1e-12)


def test_pure_noise_votes_are_coin_flips():
    assert_allclose(pb_power(3, 0.5, 0.05, 0.0), 0.5, atol=1e-12)
    assert_allclose(pb_power(11, 0.5, 0.05, 0.9), 0.5, atol=1e-12)


def test_keep_probability():
    assert_allclose(randomized_response_keep_probability(1.0), math.e / (1 + math.e), rtol=1e-14)


@pytest.mark.parametrize("m", [2, 0, 10])
def test_even_subset_count_rejected(m):
    with pytest.raises(PowerParameterError):
        pb_power(m, 0.8, 0.05, 0.5)


def test_power_against_simulation(sim_settings):
    plan = SimPlan(
        generator=GeneratorSpec.bernoulli(0.6),
        engine="pb",
        replicates=50_000,
        seed=17,
        config=ToTConfig(epsilon=1.0, alpha=0.05, m=7, alpha0=0.05),
        pb_p=0.88
    )
    expected = pb_power(7, 0.88, 0.05, 0.6)
    estimate = estimate_rejection_rate(plan, sim_settings).estimate
    assert abs(estimate - expected) <= mc_band(expected, 50_000)


@pytest.mark.parametrize("m", [3, 5, 7, 9])
@pytest.mark.parametrize("epsilon", [0.5, 1.0, 2.0])
def test_private_test_dominates_majority_vote(m, epsilon):
    grid = np.linspace(0.1, 0.9, 9)
    assert pb_dominance_check(m, 0.05, epsilon, 0.05, grid)
