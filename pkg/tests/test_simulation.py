import math

import numpy as np
import pytest

from core.configuration import SimulationSettings
from core.power import PowerQuery, optimize_known_effect, tot_power
from core.public_tests import Dataset, PublicTest, ZTest, ztest_power
from core.simulation import (
    GeneratorSpec,
    SimPlan,
    SimPlanError,
    collect_pvalues,
    estimate_pvalue_uniformity,
    estimate_rejection_rate,
    generate,
    replicate_rng,
)
from core.tot_engine import ToTConfig, binomial_tulap_sf, run_tot
from core.tot_engine import private_binomial as private_binomial_module

from .conftest import mc_band


class SyntheticSubsetTest(PublicTest):
    """Sub-test de una fila cuyo p-valor es el propio valor de la fila."""

    name = "synthetic"

    def min_sample_size(self) -> int:
        return 1

    def _p_value(self, subset):
        return float(subset.column()[0])

    def _power(self, n, effect, alpha0):
        return alpha0


def synthetic_pvalues(m, alpha0, theta, rng):
    """m p-valores con P(p < α₀) = θ."""
    below = rng.random(m) < theta
    return np.where(below, rng.uniform(0.0, alpha0, size=m), rng.uniform(alpha0, 1.0, size=m))


def bernoulli_plan(theta, m, alpha0, epsilon, replicates=20_000, seed=5):
    return SimPlan(
        generator=GeneratorSpec.bernoulli(theta),
        engine="tot",
        replicates=replicates,
        seed=seed,
        config=ToTConfig(epsilon=epsilon, alpha=0.05, m=m, alpha0=alpha0)
    )


@pytest.mark.parametrize("epsilon", [0.1, 1.0])
@pytest.mark.parametrize("m", [5, 20, 50])
@pytest.mark.parametrize("alpha0", [0.05, 0.2])
@pytest.mark.parametrize("theta", [0.1, 0.5, 0.9])
def test_synthetic_subtests_match_exact_power(epsilon, m, alpha0, theta, sim_settings):
    plan = bernoulli_plan(theta, m, alpha0, epsilon)
    expected = tot_power(PowerQuery(epsilon, 0.05, m, alpha0, theta))
    estimate = estimate_rejection_rate(plan, sim_settings).estimate
    assert abs(estimate - expected) <= mc_band(expected, plan.replicates)


def test_full_pipeline_matches_exact_power(sim_settings):
    config = ToTConfig(epsilon=1.0, alpha=0.05, m=10, alpha0=0.2)
    plan = SimPlan(GeneratorSpec.normal(40, 0.5), "tot", 2000, 21, config, test="z")
    theta = ztest_power(4, 0.5, 0.2)
    expected = tot_power(PowerQuery(1.0, 0.05, 10, 0.2, theta))
    estimate = estimate_rejection_rate(plan, sim_settings).estimate
    assert abs(estimate - expected) <= mc_band(expected, plan.replicates)


def test_level_under_null(sim_settings):
    config = ToTConfig(epsilon=1.0, alpha=0.05, m=10, alpha0=0.05)
    plan = SimPlan(GeneratorSpec.normal(50, 0.0), "tot", 2000, 8, config, test="z")
    assert estimate_rejection_rate(plan, sim_settings).estimate <= 0.05 + mc_band(0.05, 2000)


def test_private_pvalues_super_uniform_under_null(sim_settings):
    result = estimate_pvalue_uniformity(bernoulli_plan(0.1, 20, 0.1, 1.0, replicates=50_000), settings=sim_settings)
    assert result.one_sided
    assert result.passed


def test_public_pvalues_uniform_under_null(sim_settings):
    plan = SimPlan(GeneratorSpec.mvn(5, [0.0, 0.0, 0.0]), "public", 3000, 13, test="mvn-mean")
    result = estimate_pvalue_uniformity(plan, settings=sim_settings)
    assert not result.one_sided
    assert result.passed


def test_uniformity_requires_null(sim_settings):
    with pytest.raises(SimPlanError):
        estimate_pvalue_uniformity(bernoulli_plan(0.5, 5, 0.1, 1.0), settings=sim_settings)


def test_results_independent_of_threads():
    plan = SimPlan(GeneratorSpec.anova(18, 0.3, 3), "tot", 200, 4,
                   ToTConfig(epsilon=1.0, alpha=0.05, m=3, alpha0=0.2), test="anova")
    serial = collect_pvalues(plan, SimulationSettings(max_workers=1))
    threaded = collect_pvalues(plan, SimulationSettings(max_workers=4))
    np.testing.assert_array_equal(serial, threaded)


def test_bernoulli_blocks_are_reproducible(sim_settings):
    plan = bernoulli_plan(0.4, 7, 0.1, 0.5, replicates=25_000)
    np.testing.assert_array_equal(collect_pvalues(plan, sim_settings), collect_pvalues(plan, sim_settings))


def test_generators(rng):
    anova = generate(GeneratorSpec.anova(12, 0.5, 3), rng)
    assert anova.n == 12 and anova.has_groups and len(anova.groups()) == 3
    mvn = generate(GeneratorSpec.mvn(4, [0.1, 0.2]), rng)
    assert (mvn.n, mvn.dim) == (4, 2)
    with pytest.raises(SimPlanError):
        generate(GeneratorSpec.bernoulli(0.3), rng)
    first = generate(GeneratorSpec.normal(5, 1.0), replicate_rng(3, 0)).values
    np.testing.assert_array_equal(first, generate(GeneratorSpec.normal(5, 1.0), replicate_rng(3, 0)).values)


def test_plan_validation():
    config = ToTConfig(epsilon=1.0, alpha=0.05, m=4, alpha0=0.1)
    with pytest.raises(SimPlanError):
        SimPlan(GeneratorSpec.normal(10), "tot", 10, 1, config, test="anova")
    with pytest.raises(SimPlanError):
        SimPlan(GeneratorSpec.bernoulli(0.3), "pb", 10, 1, config, pb_p=0.8)
    with pytest.raises(SimPlanError):
        SimPlan(GeneratorSpec.normal(3), "tot", 10, 1, config, test="z")
    with pytest.raises(SimPlanError):
        SimPlan(GeneratorSpec.normal(10), "tot", 0, 1, config, test="z")
    with pytest.raises(SimPlanError):
        collect_pvalues(SimPlan(GeneratorSpec.bernoulli(0.3), "pb", 10, 1,
                                ToTConfig(epsilon=1.0, alpha=0.05, m=5, alpha0=0.1), pb_p=0.8))


@pytest.mark.slow
def test_optimized_z_test_at_seventy_by_simulation():
    chosen = optimize_known_effect(ZTest(), 70, 0.65, 1.0, 0.05)
    config = ToTConfig(epsilon=1.0, alpha=0.05, m=chosen.m, alpha0=chosen.alpha0)
    plan = SimPlan(GeneratorSpec.normal(70, 0.65), "tot", 20_000, 70, config, test="z")
    assert estimate_rejection_rate(plan).estimate >= 0.80 - mc_band(0.80, 20_000)


def test_bernoulli_engine_releases_counts_through_tulap_sampler(monkeypatch, sim_settings):
    # Sin ruido z es el conteo entero y cada p-valor cae en la cola de B+N en 0..m
    monkeypatch.setattr(
        private_binomial_module, "tulap_sample", lambda params, rng, size=None: np.zeros(size)
    )
    p_values = collect_pvalues(bernoulli_plan(0.4, 7, 0.1, 1.0, replicates=500), sim_settings)
    support = np.asarray(binomial_tulap_sf(np.arange(8), 7, 0.1, 1.0))
    assert np.isclose(p_values[:, np.newaxis], support[np.newaxis, :], rtol=0, atol=1e-12).any(axis=1).all()


@pytest.mark.parametrize("theta,m,alpha0,epsilon", [(0.6, 10, 0.2, 1.0), (0.9, 15, 0.1, 0.5), (0.1, 8, 0.1, 1.0)])
def test_run_tot_with_synthetic_subtests_matches_exact_power(theta, m, alpha0, epsilon):
    replicates = 3000
    config = ToTConfig(epsilon=epsilon, alpha=0.05, m=m, alpha0=alpha0)
    test = SyntheticSubsetTest()
    rejections = 0
    for r in range(replicates):
        rng = replicate_rng(41, r)
        data = Dataset.univariate(synthetic_pvalues(m, alpha0, theta, rng))
        rejections += run_tot(data, test, config, rng).reject
    expected = tot_power(PowerQuery(epsilon, 0.05, m, alpha0, theta))
    assert abs(rejections / replicates - expected) <= mc_band(expected, replicates)


NULL_GENERATORS = {
    "t": lambda n: GeneratorSpec.normal(n, 0.0),
    "anova": lambda n: GeneratorSpec.anova(n, 0.0, 3),
    "mvn-mean": lambda n: GeneratorSpec.mvn(n, [0.0, 0.0, 0.0]),
}


@pytest.mark.slow
@pytest.mark.parametrize("m", [5, math.isqrt(64)])
@pytest.mark.parametrize("epsilon", [0.1, 1.0])
@pytest.mark.parametrize("family", sorted(NULL_GENERATORS))
def test_level_under_null_across_tests(family, epsilon, m, sim_settings):
    replicates = 4000
    config = ToTConfig(epsilon=epsilon, alpha=0.05, m=m, alpha0=0.1)
    plan = SimPlan(NULL_GENERATORS[family](64), "tot", replicates, 17, config, test=family)
    estimate = estimate_rejection_rate(plan, sim_settings).estimate
    assert estimate <= 0.05 + mc_band(0.05, replicates)
