"""
Test de media de una normal multivariada N(μ, I_d), H₀: μ = 0.

Estadístico n·Σ x̄_j² ~ χ²_d bajo H₀ y χ²(d, λ = n·Σ μ_j²) bajo la
alternativa.
"""

from typing import Optional, Sequence, Union

import numpy as np
from scipy.stats import chi2

from ..distributions import NoncentralParams, noncentral_sf
from .base import Dataset, PublicTest
from .effects import EffectSpec, MeanVectorEffect
from .exceptions import PublicTestConfigurationError


class MvnMeanTest(PublicTest):

    name = "mvn-mean"

    def __init__(self, dim: Optional[int] = None):
        self.dim = dim

    def min_sample_size(self) -> int:
        return 1

    def coerce_effect(self, effect) -> EffectSpec:
        if isinstance(effect, MeanVectorEffect):
            pass
        elif isinstance(effect, (list, tuple, np.ndarray)):
            effect = MeanVectorEffect.from_sequence(effect)
        else:
            raise PublicTestConfigurationError(
                "El test multivariado requiere un vector de medias", context={"effect": effect}
            )
        if self.dim is not None and effect.dim != self.dim:
            raise PublicTestConfigurationError(
                "Dimensión del efecto distinta a la del test",
                context={"test_dim": self.dim, "effect_dim": effect.dim}
            )
        return effect

    def _p_value(self, subset: Dataset) -> Optional[float]:
        if self.dim is not None and subset.dim != self.dim:
            raise PublicTestConfigurationError(
                "Dimensión de los datos distinta a la del test",
                context={"test_dim": self.dim, "data_dim": subset.dim}
            )
        means = subset.values.mean(axis=0)
        statistic = subset.n * float(np.sum(means ** 2))
        return float(chi2.sf(statistic, subset.dim))

    def _power(self, n: int, effect: EffectSpec, alpha0: float) -> float:
        critical = float(chi2.isf(alpha0, effect.dim))
        return noncentral_sf(critical, NoncentralParams.chi_square(effect.dim, effect.noncentrality(n)))


def mvn_mean_pvalue(subset: Dataset) -> Optional[float]:
    return MvnMeanTest().p_value(subset)


def mvn_mean_power(n: int, mu: Union[Sequence[float], MeanVectorEffect], alpha0: float) -> float:
    return MvnMeanTest().power(n, mu, alpha0)
