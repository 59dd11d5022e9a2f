"""
Potencia del marco de respuesta aleatorizada (PB)
ToT-Privacy - Voto mayoritario sobre decisiones volteadas

Cada sub-test rechaza con probabilidad θ; cada decisión se conserva con
probabilidad p y se invierte con 1 - p. El test rechaza cuando más de
(m-1)/2 decisiones publicadas son rechazos. Dado i rechazos reales, el
número publicado es Poisson-binomial con vector (p×i, (1-p)×(m-i)).
"""

import logging
import math
from typing import Iterable, Optional

from scipy.stats import binom

from ..configuration import PowerSettings
from ..distributions import SuccessVector, poisson_binomial_sf
from .analytic import PowerQuery, tot_power
from .exceptions import PowerParameterError

logger = logging.getLogger("tot.power")

DOMINANCE_TOLERANCE = 1e-10


def randomized_response_keep_probability(epsilon: float) -> float:
    """p = e^ε / (1 + e^ε): respuesta aleatorizada ε-DP sobre un bit."""
    if not epsilon > 0:
        raise PowerParameterError(f"epsilon debe ser positivo, recibido {epsilon}", context={"epsilon": epsilon})
    return 1.0 / (1.0 + math.exp(-epsilon))


def pb_power(m: int, p: float, alpha0: float, theta: float) -> float:
    """
    Potencia exacta del voto mayoritario:

        Σ_i C(m,i) θ^i (1-θ)^{m-i} · P(PoiBin(p×i, (1-p)×(m-i)) >= (m+1)/2)

    α₀ solo fija el umbral con el que θ fue calculado; se valida pero no entra
    en la suma.

    Raises:
        PowerParameterError: si m es par o algún parámetro está fuera de rango
    """
    if m < 1 or m % 2 == 0:
        raise PowerParameterError(f"El marco PB requiere m impar, recibido {m}", context={"m": m})
    if not 0.0 <= p <= 1.0:
        raise PowerParameterError(f"p debe estar en [0,1], recibido {p}", context={"p": p})
    if not 0.0 < alpha0 < 1.0:
        raise PowerParameterError(f"α₀ debe estar en (0,1), recibido {alpha0}", context={"alpha0": alpha0})
    if not 0.0 <= theta <= 1.0:
        raise PowerParameterError(f"θ debe estar en [0,1], recibido {theta}", context={"theta": theta})

    majority = (m + 1) // 2
    weights = binom.pmf(range(m + 1), m, theta)
    total = 0.0
    for rejections, weight in enumerate(weights):
        if weight == 0:
            continue
        published = SuccessVector.randomized_response(p, rejections, m)
        total += weight * poisson_binomial_sf(majority, published)
    return float(min(max(total, 0.0), 1.0))


def pb_level(m: int, p: float, alpha0: float) -> float:
    """Error Tipo I del voto mayoritario: potencia con θ = α₀."""
    return pb_power(m, p, alpha0, alpha0)


def pb_dominance_check(
    m: int,
    alpha0: float,
    epsilon: float,
    alpha: float,
    theta_grid: Iterable[float],
    p: Optional[float] = None,
    settings: Optional[PowerSettings] = None
) -> bool:
    """
    Verifica tot_power >= pb_power en cada θ >= α₀ de la rejilla.

    Ambos tests se comparan al mismo nivel: el ToT se calibra a
    max(α, nivel del voto PB), de modo que ninguno gana por tener un
    error Tipo I mayor.
    """
    keep = randomized_response_keep_probability(epsilon) if p is None else p
    level = min(max(alpha, pb_level(m, keep, alpha0)), 1.0 - 1e-12)

    for theta in theta_grid:
        if theta < alpha0:
            continue
        private = tot_power(PowerQuery(epsilon, level, m, alpha0, theta), settings)
        majority = pb_power(m, keep, alpha0, theta)
        if private < majority - DOMINANCE_TOLERANCE:
            logger.info(
                f"PB supera al ToT en la rejilla: m={m} θ={theta} ToT={private:.6g} PB={majority:.6g}"
            )
            return False
    return True
