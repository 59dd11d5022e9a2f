"""
ANOVA de una vía
ToT-Privacy - Estadístico F con etiquetas de grupo públicas

Potencia con F no central, λ = n·η y grupos de igual tamaño.
"""

from typing import Optional

import numpy as np
from scipy.stats import f as f_dist

from ..distributions import NoncentralParams, noncentral_sf
from .base import Dataset, PublicTest
from .effects import AnovaEffect, EffectSpec
from .exceptions import PublicTestConfigurationError


class AnovaTest(PublicTest):
    """
    F = (SSB/(g-1)) / (SSW/(n-g)) con cola superior de F_{g-1, n-g}.

    Args:
        groups: Número de grupos esperado en cada sub-base; None lo toma de
            los datos (al menos 2)

    El test no corre (p_value None) si falta algún grupo, si n - g < 1 o si
    la variación dentro de grupos es nula.
    """

    name = "anova"

    def __init__(self, groups: Optional[int] = None):
        if groups is not None and groups < 2:
            raise PublicTestConfigurationError(
                f"ANOVA requiere g >= 2, recibido {groups}", context={"groups": groups}
            )
        self.groups = groups

    def min_sample_size(self) -> int:
        return (self.groups or 2) + 1

    def coerce_effect(self, effect) -> EffectSpec:
        if not isinstance(effect, AnovaEffect):
            raise PublicTestConfigurationError(
                "ANOVA requiere un AnovaEffect (η, g)", context={"effect": effect}
            )
        if self.groups is not None and effect.groups != self.groups:
            raise PublicTestConfigurationError(
                "El número de grupos del efecto no coincide con el test",
                context={"test_groups": self.groups, "effect_groups": effect.groups}
            )
        return effect

    def _p_value(self, subset: Dataset) -> Optional[float]:
        if subset.group_labels is None:
            raise PublicTestConfigurationError("ANOVA requiere etiquetas de grupo")
        if subset.dim != 1:
            raise PublicTestConfigurationError(
                "ANOVA requiere datos univariados", context={"dim": subset.dim}
            )

        _, codes = np.unique(subset.group_labels, return_inverse=True)
        present = int(codes.max()) + 1
        required = self.groups or 2
        n = subset.n
        if present < required or n - present < 1:
            return None

        x = subset.column()
        counts = np.bincount(codes, minlength=present)
        means = np.bincount(codes, weights=x, minlength=present) / counts
        ss_within = float(np.sum((x - means[codes]) ** 2))
        ss_between = float(np.sum(counts * (means - x.mean()) ** 2))
        if ss_within <= 0:
            return None

        statistic = (ss_between / (present - 1)) / (ss_within / (n - present))
        return float(f_dist.sf(statistic, present - 1, n - present))

    def _power(self, n: int, effect: EffectSpec, alpha0: float) -> float:
        g = effect.groups
        if n - g < 1:
            return float(alpha0)
        critical = float(f_dist.isf(alpha0, g - 1, n - g))
        return noncentral_sf(critical, NoncentralParams.f(g - 1, n - g, n * effect.eta))


def anova_pvalue(subset: Dataset, groups: Optional[int] = None) -> Optional[float]:
    return AnovaTest(groups).p_value(subset)


def anova_power(n: int, effect: AnovaEffect, alpha0: float) -> float:
    return AnovaTest(effect.groups).power(n, effect, alpha0)
