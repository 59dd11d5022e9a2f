"""
Cota inferior del error Tipo I del test multivariado de Canonne et al.
ToT-Privacy - Umbral de rechazo seguro y cota vía convolución normal-Laplace

Con σ = n√(2d), L ~ Laplace(b) y Z ~ N(0, σ²), el error Tipo I está acotado
inferiormente por 1 - F_{Z+L}(n²γ²/324). Por debajo del umbral
max{25 ln(d/δ), (5/ε) ln(1/δ)} el test siempre rechaza. Todos los
logaritmos son naturales.
"""

import math
from dataclasses import dataclass

from ..distributions import normal_laplace_cdf
from .exceptions import PowerParameterError


@dataclass(frozen=True)
class CanonneQuery:
    """(n, d, ε, δ, γ) del test multivariado aproximado-DP."""

    n: int
    d: int
    epsilon: float
    delta: float
    gamma: float

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise PowerParameterError("n y d deben ser >= 1", context={"n": self.n, "d": self.d})
        if not self.epsilon > 0:
            raise PowerParameterError(f"epsilon debe ser positivo, recibido {self.epsilon}",
                                      context={"epsilon": self.epsilon})
        if not 0.0 < self.delta < 1.0:
            raise PowerParameterError(f"δ debe estar en (0,1), recibido {self.delta}", context={"delta": self.delta})
        if not self.gamma > 0:
            raise PowerParameterError(f"γ debe ser positivo, recibido {self.gamma}", context={"gamma": self.gamma})


def canonne_reject_threshold(d: int, epsilon: float, delta: float) -> float:
    """max{25·ln(d/δ), (5/ε)·ln(1/δ)}: con n <= umbral el test siempre rechaza."""
    return max(25.0 * math.log(d / delta), 5.0 / epsilon * math.log(1.0 / delta))


def canonne_sensitivity(n: int, d: int, epsilon: float, delta: float) -> float:
    """
    Δ = 144·( d·ln(d/δ) + d/(nε²)·ln²(1/δ) + √(nd)·√(ln(d/δ)·ln(n/δ))
              + (√d/ε)·ln(1/δ)·√ln(n/δ) ) · ln(nd/δ)
    """
    log_d = math.log(d / delta)
    log_n = math.log(n / delta)
    log_inv = math.log(1.0 / delta)
    bracket = (
        d * log_d
        + d / (n * epsilon ** 2) * log_inv ** 2
        + math.sqrt(n * d) * math.sqrt(log_d * log_n)
        + math.sqrt(d) / epsilon * log_inv * math.sqrt(log_n)
    )
    return 144.0 * bracket * math.log(n * d / delta)


def canonne_laplace_scale(n: int, d: int, epsilon: float, delta: float) -> float:
    """
    b = (5Δ + (432d/ε)·ln(nd/δ)·√(ln(n/δ)·ln(5/(4δ)))) / ε
    """
    sensitivity = canonne_sensitivity(n, d, epsilon, delta)
    second = 432.0 * d / epsilon * math.log(n * d / delta) * math.sqrt(
        math.log(n / delta) * math.log(5.0 / (4.0 * delta))
    )
    return (5.0 * sensitivity + second) / epsilon


def canonne_type1_lower_bound(cq: CanonneQuery) -> float:
    """
    Cota inferior del error Tipo I.

    Returns:
        1 si n <= umbral; en otro caso 1 - F_{Z+L}(n²γ²/324)
    """
    if cq.n <= canonne_reject_threshold(cq.d, cq.epsilon, cq.delta):
        return 1.0
    sigma = cq.n * math.sqrt(2.0 * cq.d)
    b_lap = canonne_laplace_scale(cq.n, cq.d, cq.epsilon, cq.delta)
    threshold = cq.n ** 2 * cq.gamma ** 2 / 324.0
    return float(min(max(1.0 - normal_laplace_cdf(threshold, sigma, b_lap), 0.0), 1.0))
