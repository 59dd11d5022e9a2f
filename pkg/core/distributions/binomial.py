"""
Binomial y Poisson-binomial
ToT-Privacy - pmf/cdf exactas para el conteo de rechazos
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy.stats import binom

from .exceptions import DistributionDomainError, DistributionParameterError


def _check_probability(p: float, name: str = "p") -> None:
    if not 0.0 <= p <= 1.0:
        raise DistributionParameterError(
            f"{name} debe estar en [0,1], recibido {p}",
            context={name: p}
        )


def binomial_pmf_cdf(i: int, m: int, p: float) -> Tuple[float, float]:
    """
    pmf y cdf de Binomial(m, p) en i.

    Raises:
        DistributionDomainError: si i no está en 0..m
    """
    if m < 0:
        raise DistributionParameterError(f"m debe ser no negativo, recibido {m}", context={"m": m})
    _check_probability(p)
    if not 0 <= i <= m:
        raise DistributionDomainError(
            f"i fuera de 0..{m}",
            context={"i": i, "m": m}
        )
    pmf = float(binom.pmf(i, m, p))
    cdf = 1.0 if i == m else float(binom.cdf(i, m, p))
    return min(max(pmf, 0.0), 1.0), min(max(cdf, 0.0), 1.0)


def binomial_pmf_vector(m: int, p: float) -> np.ndarray:
    """Vector completo f_B(0..m) de Binomial(m, p)."""
    _check_probability(p)
    return binom.pmf(np.arange(m + 1), m, p)


@dataclass(frozen=True)
class SuccessVector:
    """
    Probabilidades de éxito de ensayos Bernoulli independientes.
    """
    probs: Tuple[float, ...]

    def __post_init__(self):
        if len(self.probs) < 1:
            raise DistributionParameterError("El vector de éxitos no puede estar vacío")
        for p in self.probs:
            _check_probability(p, "probs")

    @classmethod
    def from_sequence(cls, probs: Sequence[float]) -> 'SuccessVector':
        return cls(tuple(float(p) for p in probs))

    @classmethod
    def randomized_response(cls, p: float, rejections: int, m: int) -> 'SuccessVector':
        """
        Vector (p,…,p, 1-p,…,1-p): `rejections` sub-tests que rechazaron se
        mantienen con probabilidad p; los m - rejections restantes se voltean
        a rechazo con probabilidad 1 - p.
        """
        if not 0 <= rejections <= m:
            raise DistributionDomainError(
                f"rejections fuera de 0..{m}",
                context={"rejections": rejections, "m": m}
            )
        _check_probability(p)
        return cls((p,) * rejections + (1.0 - p,) * (m - rejections))

    def __len__(self) -> int:
        return len(self.probs)


def poisson_binomial_pmf_vector(sv: SuccessVector) -> np.ndarray:
    """
    pmf completa (0..m) por convolución iterativa, O(m²).

    Cada ensayo actualiza pmf[j] = pmf[j](1-p) + pmf[j-1]p.
    """
    pmf = np.zeros(len(sv) + 1)
    pmf[0] = 1.0
    for count, p in enumerate(sv.probs, start=1):
        pmf[1:count + 1] = pmf[1:count + 1] * (1.0 - p) + pmf[0:count] * p
        pmf[0] *= 1.0 - p
    return np.clip(pmf, 0.0, 1.0)


def poisson_binomial_pmf(j: int, sv: SuccessVector) -> float:
    """
    P(S = j) con S suma de Bernoulli(sv.probs[k]) independientes.

    Raises:
        DistributionDomainError: si j no está en 0..len(sv)
    """
    if not 0 <= j <= len(sv):
        raise DistributionDomainError(
            f"j fuera de 0..{len(sv)}",
            context={"j": j, "m": len(sv)}
        )
    return float(poisson_binomial_pmf_vector(sv)[j])


def poisson_binomial_sf(threshold: int, sv: SuccessVector) -> float:
    """P(S >= threshold), suma directa de la cola superior."""
    pmf = poisson_binomial_pmf_vector(sv)
    threshold = max(int(threshold), 0)
    return float(min(pmf[threshold:].sum(), 1.0))
