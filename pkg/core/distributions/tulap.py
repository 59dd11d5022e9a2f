"""
Distribución Tulap (q = 0)
==========================

Suma de una Laplace discreta y una Uniforme(-1/2, 1/2). Es el ruido del test
binomial privado uniformemente más potente. Con escala b = e^{-ε}, desplazar
la ubicación en ±1 cambia la masa de cualquier intervalo a lo sumo en un
factor e^ε.

Para t = x - m y r = redondeo(t):

    F(x) = b^{-r} / (1+b) * (b + (t - r + 1/2)(1 - b))        si r <= 0
    F(x) = 1 - b^{r} / (1+b) * (b + (r - t + 1/2)(1 - b))    si r > 0

La función es continua, por lo que la regla de redondeo en los semienteros
no altera el resultado.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.optimize import brentq

from .exceptions import DistributionParameterError, UnboundedQuantileError

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class TulapParams:
    """
    Parámetros de la Tulap: ubicación m y escala b ∈ (0,1).
    """
    location: float = 0.0
    scale: float = math.exp(-1.0)

    def __post_init__(self):
        if not (0.0 < self.scale < 1.0) or math.isnan(self.scale):
            raise DistributionParameterError(
                f"La escala Tulap debe estar en (0,1), recibido {self.scale}",
                context={"scale": self.scale}
            )
        if not math.isfinite(self.location):
            raise DistributionParameterError(
                f"La ubicación Tulap debe ser finita, recibido {self.location}",
                context={"location": self.location}
            )

    @classmethod
    def from_epsilon(cls, epsilon: float, location: float = 0.0) -> 'TulapParams':
        """Construye Tulap(location, e^{-ε}) a partir del parámetro de privacidad."""
        if not epsilon > 0 or not math.isfinite(epsilon):
            raise DistributionParameterError(
                f"epsilon debe ser positivo y finito, recibido {epsilon}",
                context={"epsilon": epsilon}
            )
        return cls(location=location, scale=math.exp(-epsilon))

    def shifted(self, location: float) -> 'TulapParams':
        """Misma escala con otra ubicación."""
        return TulapParams(location=location, scale=self.scale)


def _standard_cdf(t: np.ndarray, b: float) -> np.ndarray:
    """CDF de Tulap(0, b) evaluada en t (vectorizada)."""
    r = np.floor(t + 0.5)
    with np.errstate(invalid="ignore", over="ignore"):
        k_lower = np.maximum(-r, 0.0)
        k_upper = np.maximum(r, 0.0)
        lower = np.power(b, k_lower) / (1.0 + b) * (b + (t - r + 0.5) * (1.0 - b))
        upper = 1.0 - np.power(b, k_upper) / (1.0 + b) * (b + (r - t + 0.5) * (1.0 - b))
        cdf = np.where(r <= 0, lower, upper)
    cdf = np.where(np.isneginf(t), 0.0, cdf)
    cdf = np.where(np.isposinf(t), 1.0, cdf)
    return np.clip(cdf, 0.0, 1.0)


def _as_output(values: np.ndarray, scalar: bool) -> ArrayLike:
    return float(values) if scalar else values


def tulap_cdf(x: ArrayLike, params: TulapParams) -> ArrayLike:
    """
    CDF de la Tulap.

    Args:
        x: Punto o arreglo de puntos
        params: Parámetros de la distribución

    Returns:
        Probabilidad (mismo tipo que x)
    """
    scalar = np.ndim(x) == 0
    t = np.asarray(x, dtype=float) - params.location
    return _as_output(_standard_cdf(t, params.scale), scalar)


def tulap_sf(x: ArrayLike, params: TulapParams) -> ArrayLike:
    """
    Cola superior P(N > x), calculada por simetría sin restar de 1.
    """
    scalar = np.ndim(x) == 0
    t = params.location - np.asarray(x, dtype=float)
    return _as_output(_standard_cdf(t, params.scale), scalar)


def tulap_pdf(x: ArrayLike, params: TulapParams) -> ArrayLike:
    """Densidad: masa de la Laplace discreta del entero más cercano."""
    scalar = np.ndim(x) == 0
    t = np.asarray(x, dtype=float) - params.location
    b = params.scale
    r = np.floor(t + 0.5)
    with np.errstate(invalid="ignore"):
        density = (1.0 - b) / (1.0 + b) * np.power(b, np.abs(r))
    density = np.where(np.isfinite(t), density, 0.0)
    return _as_output(density, scalar)


def tulap_quantile(p: float, params: TulapParams) -> float:
    """
    Cuantil de la Tulap por inversión numérica de la CDF.

    Args:
        p: Probabilidad en (0,1)
        params: Parámetros de la distribución

    Returns:
        x tal que tulap_cdf(x) = p

    Raises:
        UnboundedQuantileError: si p no está en (0,1)
    """
    if not 0.0 < p < 1.0:
        raise UnboundedQuantileError(p)
    if p == 0.5:
        return float(params.location)

    # Por simetría basta invertir la cola inferior
    tail = min(p, 1.0 - p)
    b = params.scale
    half_width = math.log(tail) / math.log(b) + 2.0
    root = brentq(
        lambda t: float(_standard_cdf(np.asarray(t), b)) - tail,
        -half_width,
        0.0,
        xtol=1e-13,
        maxiter=500
    )
    offset = root if p < 0.5 else -root
    return float(params.location + offset)


def tulap_sample(
    params: TulapParams,
    rng: np.random.Generator,
    size: Optional[int] = None
) -> ArrayLike:
    """
    Muestra de la Tulap: diferencia de dos geométricas (éxito 1-b) más
    una Uniforme(-1/2, 1/2).

    Args:
        params: Parámetros de la distribución
        rng: Generador de numpy (determina la muestra)
        size: Número de muestras; None para un escalar

    Returns:
        Muestra escalar o arreglo
    """
    success = 1.0 - params.scale
    discrete = rng.geometric(success, size=size) - rng.geometric(success, size=size)
    uniform = rng.uniform(-0.5, 0.5, size=size)
    draws = params.location + discrete + uniform
    return float(draws) if size is None else np.asarray(draws, dtype=float)


def interval_mass(lower: ArrayLike, upper: ArrayLike, params: TulapParams) -> ArrayLike:
    """Masa de probabilidad de [lower, upper]."""
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    central = np.asarray(tulap_cdf(upper, params)) - np.asarray(tulap_cdf(lower, params))
    # A la derecha de la moda la diferencia de colas superiores no cancela
    upper_tail = np.asarray(tulap_sf(lower, params)) - np.asarray(tulap_sf(upper, params))
    mass = np.where(lower >= params.location, upper_tail, central)
    return np.maximum(mass, 0.0)
