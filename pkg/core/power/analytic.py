"""
Potencia exacta del ToT
=======================

Con Z = X + N, X ~ Binomial(m, θ) y N ~ Tulap(0, e^{-ε}), la potencia del
test privado a nivel α es

    P = 1 - F_Z(t*),   t* = F_{B+N}^{-1}(1 - α),   B ~ Binomial(m, α₀)

F_{B+N} no tiene inversa analítica: el cuantil se obtiene por bisección
sobre un intervalo que contiene toda la masa salvo una cola geométrica
despreciable.

El multiplicador de tamaño muestral m̃ es el menor m con P >= ρ: si τ
alcanza potencia θ con n datos, el test privado alcanza ρ con n·m̃.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import logging
import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Dict, Iterable, Optional

from scipy.optimize import bisect

from ..configuration import PowerSettings
from ..distributions import UnboundedQuantileError
from ..tot_engine import binomial_tulap_cdf, binomial_tulap_sf
from .exceptions import PowerParameterError

logger = logging.getLogger("tot.power")

DEFAULT_SETTINGS = PowerSettings()


@dataclass(frozen=True)
class PowerQuery:
    """
    Parámetros de la fórmula de potencia: (ε, α, m, α₀) y la potencia θ del
    sub-test.
    """

    epsilon: float
    alpha: float
    m: int
    alpha0: float
    theta: float

    def __post_init__(self):
        if not self.epsilon > 0 or math.isinf(self.epsilon):
            raise PowerParameterError(f"epsilon debe ser positivo, recibido {self.epsilon}",
                                      context={"epsilon": self.epsilon})
        if not 0.0 < self.alpha < 1.0:
            raise PowerParameterError(f"α debe estar en (0,1), recibido {self.alpha}", context={"alpha": self.alpha})
        if not 0.0 < self.alpha0 < 1.0:
            raise PowerParameterError(f"α₀ debe estar en (0,1), recibido {self.alpha0}",
                                      context={"alpha0": self.alpha0})
        if int(self.m) != self.m or self.m < 1:
            raise PowerParameterError(f"m debe ser un natural >= 1, recibido {self.m}", context={"m": self.m})
        if not 0.0 <= self.theta <= 1.0:
            raise PowerParameterError(f"θ debe estar en [0,1], recibido {self.theta}", context={"theta": self.theta})

    def with_theta(self, theta: float) -> 'PowerQuery':
        return PowerQuery(self.epsilon, self.alpha, self.m, self.alpha0, theta)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def bn_cdf(t: float, m: int, alpha0: float, epsilon: float) -> float:
    """F_{B+N}(t) = Σ_i f_B(i) F_N(t - i)."""
    return binomial_tulap_cdf(t, m, alpha0, epsilon)


@lru_cache(maxsize=4096)
def _bn_quantile_cached(q: float, m: int, alpha0: float, epsilon: float,
                        tolerance: float, tail_width: float) -> float:
    lower = -tail_width / epsilon - 1.0
    upper = m + tail_width / epsilon + 1.0

    def objective(t: float) -> float:
        return bn_cdf(t, m, alpha0, epsilon) - q

    # Cuantiles extremos: ensanchar hasta encerrar la raíz
    while objective(lower) > 0:
        lower -= 2.0 * (upper - lower)
    while objective(upper) < 0:
        upper += 2.0 * (upper - lower)

    xtol = tolerance / 4.0
    root = bisect(objective, lower, upper, xtol=xtol, maxiter=500)
    # F_{B+N} tiene densidad < 1: desplazar xtol garantiza F(resultado) >= q
    return float(root + xtol)


def bn_quantile(
    q: float,
    m: int,
    alpha0: float,
    epsilon: float,
    settings: Optional[PowerSettings] = None
) -> float:
    """
    Cuantil de B + N.

    Args:
        q: Probabilidad en (0,1)
        m: Número de sub-bases
        alpha0: Umbral de los sub-tests (probabilidad de éxito de B)
        epsilon: Presupuesto de privacidad
        settings: Tolerancia y ancho de cola del intervalo de bisección

    Returns:
        t con F_{B+N}(t) = q (error < tolerancia), nunca por debajo de q

    Raises:
        UnboundedQuantileError: si q no está en (0,1)
    """
    if not 0.0 < q < 1.0:
        raise UnboundedQuantileError(q, context={"m": m, "alpha0": alpha0})
    if not 0.0 < alpha0 < 1.0:
        raise PowerParameterError(f"α₀ debe estar en (0,1), recibido {alpha0}", context={"alpha0": alpha0})
    if not epsilon > 0:
        raise PowerParameterError(f"epsilon debe ser positivo, recibido {epsilon}", context={"epsilon": epsilon})
    settings = settings or DEFAULT_SETTINGS
    return _bn_quantile_cached(
        float(q), int(m), float(alpha0), float(epsilon),
        float(settings.quantile_tolerance), float(settings.bracket_tail_width)
    )


def tot_power(pq: PowerQuery, settings: Optional[PowerSettings] = None) -> float:
    """
    Potencia exacta del ToT: Σ_i f_{Binomial(m,θ)}(i) · P(N > t* - i).

    Con θ = α₀ devuelve el error Tipo I, que no supera α.
    """
    critical = bn_quantile(1.0 - pq.alpha, pq.m, pq.alpha0, pq.epsilon, settings)
    return binomial_tulap_sf(critical, pq.m, pq.theta, pq.epsilon)


def min_m_for_power(
    theta: float,
    alpha0: float,
    rho: float,
    alpha: float,
    epsilon: float,
    settings: Optional[PowerSettings] = None
) -> Optional[int]:
    """
    Multiplicador m̃: menor m con tot_power >= ρ, explorando m = 1, 2, ...

    Returns:
        m̃, o None si θ <= α₀ (ningún m alcanza ρ) o si se agota max_m_scan
    """
    if not 0.0 < rho < 1.0:
        raise PowerParameterError(f"ρ debe estar en (0,1), recibido {rho}", context={"rho": rho})
    if theta <= alpha0:
        logger.debug(f"θ={theta} <= α₀={alpha0}: ningún m alcanza la potencia objetivo")
        return None

    settings = settings or DEFAULT_SETTINGS
    for m in range(1, settings.max_m_scan + 1):
        if tot_power(PowerQuery(epsilon, alpha, m, alpha0, theta), settings) >= rho:
            return m

    logger.warning(f"Búsqueda de m̃ agotada en m={settings.max_m_scan} (ε={epsilon})")
    return None


def sample_size_multipliers(
    theta: float,
    alpha0: float,
    rho: float,
    alpha: float,
    epsilons: Iterable[float],
    settings: Optional[PowerSettings] = None
) -> Dict[float, Optional[int]]:
    """m̃ para varios ε con el resto de parámetros fijos."""
    return {
        float(epsilon): min_m_for_power(theta, alpha0, rho, alpha, epsilon, settings)
        for epsilon in epsilons
    }


def scaling_check(
    theta: float,
    alpha0: float,
    rho: float,
    alpha: float,
    epsilon: float,
    slack: int = 2,
    settings: Optional[PowerSettings] = None
) -> bool:
    """
    Comprobación empírica del escalado O(1/ε): m̃(ε/2) <= 2·m̃(ε) + slack.
    """
    full = min_m_for_power(theta, alpha0, rho, alpha, epsilon, settings)
    half = min_m_for_power(theta, alpha0, rho, alpha, epsilon / 2.0, settings)
    if full is None or half is None:
        return False
    return half <= 2 * full + slack
