"""
Test binomial privado
=====================

Agregador del ToT: el conteo a de sub-rechazos se libera como
z = Tulap(a, e^{-ε}) y el p-valor es P(B + N >= z) con B ~ Binomial(m, α₀)
y N ~ Tulap(0, e^{-ε}):

    P(B + N >= z) = Σ_i f_B(i) · F_N(i - z)

Se suma la cola superior directamente (nunca 1 - cdf) para no perder
precisión en p-valores pequeños.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..distributions import DistributionDomainError, TulapParams, binomial_pmf_vector, tulap_cdf, tulap_sample
from .exceptions import ToTConfigurationError

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class PrivateCount:
    """Conteo privatizado z de m ensayos con presupuesto ε."""
    z: float
    m: int
    epsilon: float

    def __post_init__(self):
        if self.m < 1:
            raise ToTConfigurationError(f"m debe ser >= 1, recibido {self.m}", context={"m": self.m})
        if not self.epsilon > 0:
            raise ToTConfigurationError(
                f"epsilon debe ser positivo, recibido {self.epsilon}", context={"epsilon": self.epsilon}
            )


def _check_alpha0(alpha0: float) -> None:
    if not 0.0 < alpha0 < 1.0:
        raise ToTConfigurationError(f"α₀ debe estar en (0,1), recibido {alpha0}", context={"alpha0": alpha0})


def privatize_count(a: int, m: int, epsilon: float, rng: np.random.Generator) -> PrivateCount:
    """
    Libera a ∈ [0, m] como z ~ Tulap(a, e^{-ε}).

    Raises:
        DistributionDomainError: si a no está en 0..m
    """
    if not 0 <= a <= m:
        raise DistributionDomainError(f"a fuera de 0..{m}", context={"a": a, "m": m})
    params = TulapParams.from_epsilon(epsilon, location=float(a))
    return PrivateCount(z=float(tulap_sample(params, rng)), m=int(m), epsilon=float(epsilon))


def privatize_counts(counts: np.ndarray, m: int, epsilon: float, rng: np.random.Generator) -> np.ndarray:
    """
    Versión vectorizada de privatize_count: z_r = a_r + N_r con
    N_r ~ Tulap(0, e^{-ε}) independientes.
    """
    counts = np.asarray(counts)
    if counts.size and (counts.min() < 0 or counts.max() > m):
        raise DistributionDomainError(f"Conteos fuera de 0..{m}", context={"m": m})
    noise = tulap_sample(TulapParams.from_epsilon(epsilon), rng, size=counts.size)
    return counts.astype(float) + np.asarray(noise).reshape(counts.shape)


def _tulap_terms(values: np.ndarray, m: int, success: float, epsilon: float, upper: bool) -> np.ndarray:
    """Σ_i f_B(i) F_N(±(i - t)) para cada t de `values`, con B ~ Binomial(m, success)."""
    if not 0.0 <= success <= 1.0:
        raise ToTConfigurationError(
            f"La probabilidad de éxito debe estar en [0,1], recibido {success}",
            context={"success": success}
        )
    weights = binomial_pmf_vector(m, success)
    noise = TulapParams.from_epsilon(epsilon)
    successes = np.arange(m + 1, dtype=float)
    if upper:
        arguments = successes[np.newaxis, :] - values[:, np.newaxis]
    else:
        arguments = values[:, np.newaxis] - successes[np.newaxis, :]
    return np.clip(np.asarray(tulap_cdf(arguments, noise)) @ weights, 0.0, 1.0)


def binomial_tulap_cdf(t: ArrayLike, m: int, success: float, epsilon: float) -> ArrayLike:
    """F_{B+N}(t) = Σ_i f_B(i) F_N(t - i), vectorizada en t."""
    scalar = np.ndim(t) == 0
    values = np.atleast_1d(np.asarray(t, dtype=float))
    result = _tulap_terms(values, m, success, epsilon, upper=False)
    return float(result[0]) if scalar else result


def binomial_tulap_sf(z: ArrayLike, m: int, success: float, epsilon: float) -> ArrayLike:
    """
    P(B + N >= z) = Σ_i f_B(i) F_N(i - z), vectorizada en z.

    Con success = α₀ es el p-valor privado; con success = θ es la potencia
    del test cuyo umbral es z.
    """
    scalar = np.ndim(z) == 0
    values = np.atleast_1d(np.asarray(z, dtype=float))
    result = _tulap_terms(values, m, success, epsilon, upper=True)
    return float(result[0]) if scalar else result


def private_binomial_pvalue(pc: PrivateCount, alpha0: float) -> float:
    """
    p-valor P(B + N >= z) del conteo privatizado.

    Args:
        pc: Conteo privatizado
        alpha0: Probabilidad de éxito bajo H₀ (umbral de los sub-tests)

    Returns:
        p-valor, decreciente en z
    """
    _check_alpha0(alpha0)
    if math.isnan(pc.z):
        raise ToTConfigurationError("z no puede ser NaN")
    return binomial_tulap_sf(pc.z, pc.m, alpha0, pc.epsilon)
