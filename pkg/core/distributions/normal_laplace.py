"""
Convolución normal-Laplace
ToT-Privacy - CDF de Z + L con Z ~ N(0, σ²) y L ~ Laplace(b)

Se usa en la cota inferior del error Tipo I del test de Canonne et al.
"""

import math

import numpy as np
from scipy.integrate import quad
from scipy.special import erfcx, log_ndtr, ndtr

from .exceptions import DistributionParameterError

QUAD_EPSABS = 1e-10


def _check_scales(sigma: float, b_lap: float) -> None:
    if not sigma > 0 or not b_lap > 0:
        raise DistributionParameterError(
            "Las escalas deben ser positivas",
            context={"sigma": sigma, "b_lap": b_lap}
        )


def _laplace_cdf(y: float, b_lap: float) -> float:
    if y < 0:
        return 0.5 * math.exp(y / b_lap)
    return 1.0 - 0.5 * math.exp(-y / b_lap)


def _lower_tail_quadrature(t: float, sigma: float, b_lap: float) -> float:
    """F(t) para t <= 0 por cuadratura adaptativa."""
    if b_lap < sigma:
        # L = ±b·U, U ~ Exp(1): integrando suave en u
        def integrand(u: float) -> float:
            return 0.5 * math.exp(-u) * (
                float(ndtr((t - b_lap * u) / sigma)) + float(ndtr((t + b_lap * u) / sigma))
            )
        value, _ = quad(integrand, 0.0, np.inf, epsabs=QUAD_EPSABS, limit=200)
        return value

    # Laplace más ancha que la normal: integrar sobre z con el quiebre en t/σ
    def integrand(z: float) -> float:
        return math.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi) * _laplace_cdf(t - sigma * z, b_lap)

    kink = t / sigma
    points = [kink] if -40.0 < kink < 40.0 else None
    value, _ = quad(integrand, -40.0, 40.0, points=points, epsabs=QUAD_EPSABS, limit=200)
    return value


def normal_laplace_cdf(t: float, sigma: float, b_lap: float) -> float:
    """
    P(Z + L <= t) por cuadratura adaptativa (tolerancia absoluta 1e-10).

    Se integra siempre la cola inferior en -|t| y se obtiene la superior por
    simetría, de modo que F(t) + F(-t) = 1 exactamente.

    Raises:
        DistributionParameterError: si sigma o b_lap no son positivos
    """
    _check_scales(sigma, b_lap)
    if t == 0:
        return 0.5
    if math.isinf(t):
        return 1.0 if t > 0 else 0.0
    lower = min(max(_lower_tail_quadrature(-abs(t), sigma, b_lap), 0.0), 0.5)
    return lower if t < 0 else 1.0 - lower


def normal_laplace_cdf_closed(t: float, sigma: float, b_lap: float) -> float:
    """
    Forma cerrada:

        Φ(t/σ) - ½ e^{σ²/2b² - t/b} Φ(t/σ - σ/b) + ½ e^{σ²/2b² + t/b} Φ(-t/σ - σ/b)

    Los productos exponencial × Φ se reescriben con erfcx para que no
    desborden cuando σ/b es grande.
    """
    _check_scales(sigma, b_lap)
    if t == 0:
        return 0.5
    if math.isinf(t):
        return 1.0 if t > 0 else 0.0
    s = -abs(t)
    gaussian = math.exp(-s * s / (2.0 * sigma * sigma))
    ratio = sigma / b_lap

    # e^{σ²/2b² - s/b} Φ(-x) = e^{-s²/2σ²} erfcx(x/√2) / 2, con x = σ/b - s/σ > 0
    minus_term = 0.25 * gaussian * float(erfcx((ratio - s / sigma) / math.sqrt(2.0)))

    y = ratio + s / sigma
    if y > 0:
        plus_term = 0.25 * gaussian * float(erfcx(y / math.sqrt(2.0)))
    else:
        plus_term = 0.5 * math.exp(ratio * ratio / 2.0 + s / b_lap + float(log_ndtr(-y)))

    lower = float(ndtr(s / sigma)) - minus_term + plus_term
    lower = min(max(lower, 0.0), 0.5)
    return lower if t < 0 else 1.0 - lower
