"""
Distribuciones no centrales
===========================

χ², F y t no centrales para la potencia analítica de los tests públicos.

χ² y F se calculan como mezclas de Poisson:

    F(x; d, λ) = Σ_k Pois(k; λ/2) · F_central(x; d + 2k)

truncando la serie cuando la masa Poisson restante es menor que 1e-13. La cola
superior se suma directamente con las colas centrales. La t no central se
delega en scipy.stats.nct.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from scipy.special import betainc, gammainc, gammaincc
from scipy.stats import f as f_dist
from scipy.stats import nct, poisson
from scipy.stats import t as t_dist

from .exceptions import DistributionParameterError

TAIL_MASS = 1e-13


class NoncentralFamily(Enum):
    """Familias no centrales soportadas."""
    CHI_SQUARE = "chi-square"
    F = "F"
    T = "t"


@dataclass(frozen=True)
class NoncentralParams:
    """
    Familia, grados de libertad y noncentralidad λ >= 0.

    Para χ² y t se usa df1; F usa (df1, df2).
    """
    family: NoncentralFamily
    df1: float
    df2: Optional[float] = None
    noncentrality: float = 0.0

    def __post_init__(self):
        if not self.noncentrality >= 0 or math.isinf(self.noncentrality):
            raise DistributionParameterError(
                f"La noncentralidad debe ser >= 0 y finita, recibido {self.noncentrality}",
                context={"noncentrality": self.noncentrality}
            )
        if not self.df1 >= 1:
            raise DistributionParameterError(
                f"df1 debe ser >= 1, recibido {self.df1}",
                context={"df1": self.df1}
            )
        if self.family is NoncentralFamily.F:
            if self.df2 is None or not self.df2 >= 1:
                raise DistributionParameterError(
                    f"F requiere df2 >= 1, recibido {self.df2}",
                    context={"df2": self.df2}
                )

    @classmethod
    def chi_square(cls, df: float, noncentrality: float = 0.0) -> 'NoncentralParams':
        return cls(NoncentralFamily.CHI_SQUARE, df, None, noncentrality)

    @classmethod
    def f(cls, df1: float, df2: float, noncentrality: float = 0.0) -> 'NoncentralParams':
        return cls(NoncentralFamily.F, df1, df2, noncentrality)

    @classmethod
    def t(cls, df: float, noncentrality: float = 0.0) -> 'NoncentralParams':
        return cls(NoncentralFamily.T, df, None, noncentrality)


def _poisson_terms(noncentrality: float) -> Tuple[np.ndarray, np.ndarray]:
    """Índices k y pesos Pois(k; λ/2) cubriendo toda la masa salvo TAIL_MASS."""
    mean = noncentrality / 2.0
    k_low = int(poisson.ppf(TAIL_MASS / 2.0, mean))
    k_high = int(poisson.isf(TAIL_MASS / 2.0, mean)) + 1
    k = np.arange(max(k_low, 0), k_high + 1)
    return k, poisson.pmf(k, mean)


def _chi_square_tails(x: float, params: NoncentralParams) -> Tuple[float, float]:
    if x <= 0:
        return 0.0, 1.0
    half_df = params.df1 / 2.0
    if params.noncentrality == 0:
        return float(gammainc(half_df, x / 2.0)), float(gammaincc(half_df, x / 2.0))
    k, weights = _poisson_terms(params.noncentrality)
    cdf = float(np.dot(weights, gammainc(half_df + k, x / 2.0)))
    sf = float(np.dot(weights, gammaincc(half_df + k, x / 2.0)))
    return cdf, sf


def _f_tails(x: float, params: NoncentralParams) -> Tuple[float, float]:
    if x <= 0:
        return 0.0, 1.0
    d1, d2 = params.df1, params.df2
    if params.noncentrality == 0:
        return float(f_dist.cdf(x, d1, d2)), float(f_dist.sf(x, d1, d2))
    # I_y(d1/2 + k, d2/2) con y = d1 x / (d1 x + d2); la cola usa 1 - y sin restar
    y = d1 * x / (d1 * x + d2)
    y_complement = d2 / (d1 * x + d2)
    k, weights = _poisson_terms(params.noncentrality)
    cdf = float(np.dot(weights, betainc(d1 / 2.0 + k, d2 / 2.0, y)))
    sf = float(np.dot(weights, betainc(d2 / 2.0, d1 / 2.0 + k, y_complement)))
    return cdf, sf


def _t_tails(x: float, params: NoncentralParams) -> Tuple[float, float]:
    if params.noncentrality == 0:
        return float(t_dist.cdf(x, params.df1)), float(t_dist.sf(x, params.df1))
    return (
        float(nct.cdf(x, params.df1, params.noncentrality)),
        float(nct.sf(x, params.df1, params.noncentrality))
    )


_TAILS = {
    NoncentralFamily.CHI_SQUARE: _chi_square_tails,
    NoncentralFamily.F: _f_tails,
    NoncentralFamily.T: _t_tails,
}


def _tails(x: float, params: NoncentralParams) -> Tuple[float, float]:
    if math.isnan(x):
        raise DistributionParameterError("x no puede ser NaN")
    if x == math.inf:
        return 1.0, 0.0
    if x == -math.inf:
        return 0.0, 1.0
    cdf, sf = _TAILS[params.family](float(x), params)
    return min(max(cdf, 0.0), 1.0), min(max(sf, 0.0), 1.0)


def noncentral_cdf(x: float, params: NoncentralParams) -> float:
    """
    CDF no central; con λ = 0 coincide con la distribución central.

    Args:
        x: Punto de evaluación
        params: Familia, grados de libertad y noncentralidad

    Returns:
        P(X <= x)
    """
    return _tails(x, params)[0]


def noncentral_sf(x: float, params: NoncentralParams) -> float:
    """Cola superior P(X > x) sumada directamente."""
    return _tails(x, params)[1]
