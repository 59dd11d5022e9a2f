"""
t-test de una muestra, unilateral H₁: μ > 0
ToT-Privacy - p-valor por scipy, potencia por t no central
"""

import math
from typing import Optional

from scipy.stats import t as t_dist
from scipy.stats import ttest_1samp

from ..distributions import NoncentralParams, noncentral_cdf, noncentral_sf
from .base import Dataset, PublicTest
from .effects import EffectSpec, ScalarEffect
from .exceptions import PublicTestConfigurationError


class TTest(PublicTest):
    """
    Estadístico √n·x̄/s con cola superior de t_{n-1}.

    Con n < 2 o desviación estándar nula el test no puede ejecutarse.
    """

    name = "t"

    def min_sample_size(self) -> int:
        return 2

    def coerce_effect(self, effect) -> EffectSpec:
        effect = super().coerce_effect(effect)
        if not isinstance(effect, ScalarEffect):
            raise PublicTestConfigurationError(
                "El t-test requiere un efecto escalar", context={"effect": effect}
            )
        return effect

    def _p_value(self, subset: Dataset) -> Optional[float]:
        if subset.dim != 1:
            raise PublicTestConfigurationError(
                "El t-test requiere datos univariados", context={"dim": subset.dim}
            )
        x = subset.column()
        if x.std(ddof=1) == 0:
            return None
        return float(ttest_1samp(x, 0.0, alternative="greater").pvalue)

    def _power(self, n: int, effect: EffectSpec, alpha0: float) -> float:
        df = n - 1
        t_critical = float(t_dist.isf(alpha0, df))
        shift = math.sqrt(n) * effect.magnitude
        if shift < 0:
            # P(T > c; -δ) = P(T < -c; δ)
            return noncentral_cdf(-t_critical, NoncentralParams.t(df, -shift))
        return noncentral_sf(t_critical, NoncentralParams.t(df, shift))


_T_TEST = TTest()


def ttest_pvalue(subset: Dataset) -> Optional[float]:
    return _T_TEST.p_value(subset)


def ttest_power(n: int, effect: float, alpha0: float) -> float:
    return _T_TEST.power(n, effect, alpha0)
