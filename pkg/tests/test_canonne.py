import pytest
from numpy.testing import assert_allclose

from core.power import (
    CanonneQuery,
    PowerParameterError,
    canonne_laplace_scale,
    canonne_reject_threshold,
    canonne_sensitivity,
    canonne_type1_lower_bound,
)


def query(n):
    return CanonneQuery(n=n, d=100, epsilon=1.0, delta=1e-3, gamma=0.1)


def test_reject_threshold():
    assert_allclose(canonne_reject_threshold(100, 1.0, 1e-3), 287.82313662, rtol=1e-8)


def test_always_rejects_below_threshold():
    assert canonne_type1_lower_bound(query(10)) == 1.0
    assert canonne_type1_lower_bound(query(287)) == 1.0


@pytest.mark.parametrize("n", [288, 359])
def test_bound_near_half_just_after_threshold(n):
    assert abs(canonne_type1_lower_bound(query(n)) - 0.5) <= 0.05


def test_bound_decreases_slowly_with_n():
    bounds = [canonne_type1_lower_bound(query(n)) for n in (10_000, 100_000, 1_000_000)]
    assert bounds[0] >= bounds[1] >= bounds[2]
    assert bounds[2] < bounds[0]
    assert all(0.0 <= b <= 1.0 for b in bounds)


def test_noise_scale_dominates_sensitivity():
    sensitivity = canonne_sensitivity(1000, 100, 1.0, 1e-3)
    assert canonne_laplace_scale(1000, 100, 1.0, 1e-3) > 5 * sensitivity > 0


def test_query_validation():
    with pytest.raises(PowerParameterError):
        CanonneQuery(n=100, d=10, epsilon=1.0, delta=0.0, gamma=0.1)
    with pytest.raises(PowerParameterError):
        CanonneQuery(n=0, d=10, epsilon=1.0, delta=1e-3, gamma=0.1)
