"""
z-test de una muestra (σ = 1 conocida), unilateral H₁: μ > 0.
"""

import math
from typing import Optional

from scipy.stats import norm

from .base import Dataset, PublicTest
from .effects import EffectSpec, ScalarEffect
from .exceptions import PublicTestConfigurationError


class ZTest(PublicTest):
    """p = 1 - Φ(√n·x̄); potencia 1 - Φ(Φ⁻¹(1-α₀) - √n·efecto)."""

    name = "z"

    def min_sample_size(self) -> int:
        return 1

    def coerce_effect(self, effect) -> EffectSpec:
        effect = super().coerce_effect(effect)
        if not isinstance(effect, ScalarEffect):
            raise PublicTestConfigurationError(
                "El z-test requiere un efecto escalar", context={"effect": effect}
            )
        return effect

    def _p_value(self, subset: Dataset) -> Optional[float]:
        if subset.dim != 1:
            raise PublicTestConfigurationError(
                "El z-test requiere datos univariados", context={"dim": subset.dim}
            )
        x = subset.column()
        return float(norm.sf(math.sqrt(subset.n) * x.mean()))

    def _power(self, n: int, effect: EffectSpec, alpha0: float) -> float:
        return float(norm.sf(norm.isf(alpha0) - math.sqrt(n) * effect.magnitude))


_Z_TEST = ZTest()


def ztest_pvalue(subset: Dataset) -> Optional[float]:
    return _Z_TEST.p_value(subset)


def ztest_power(n: int, effect: float, alpha0: float) -> float:
    return _Z_TEST.power(n, effect, alpha0)
