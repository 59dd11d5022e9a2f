"""
Tamaños de efecto
ToT-Privacy - Variantes de EffectSpec por familia de test

Cada variante expone `magnitude` (escalar que ordena la detectabilidad) y
`with_magnitude` (misma forma, otra magnitud), lo que permite construir
rejillas de efectos para el optimizador.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .exceptions import PublicTestConfigurationError


class EffectSpec(ABC):
    """Efecto bajo la alternativa."""

    @property
    @abstractmethod
    def magnitude(self) -> float:
        pass

    @abstractmethod
    def with_magnitude(self, magnitude: float) -> 'EffectSpec':
        pass

    @abstractmethod
    def to_dict(self) -> dict:
        pass


@dataclass(frozen=True)
class ScalarEffect(EffectSpec):
    """Media estandarizada μ/σ (z-test y t-test)."""
    size: float

    @property
    def magnitude(self) -> float:
        return float(self.size)

    def with_magnitude(self, magnitude: float) -> 'ScalarEffect':
        return ScalarEffect(float(magnitude))

    def to_dict(self) -> dict:
        return {"effect": self.size}


@dataclass(frozen=True)
class AnovaEffect(EffectSpec):
    """
    η = Var(μ₁..μ_g)/σ² (varianza poblacional de las medias) con g grupos
    de igual tamaño.
    """
    eta: float
    groups: int

    def __post_init__(self):
        if not self.eta >= 0:
            raise PublicTestConfigurationError(
                f"η debe ser >= 0, recibido {self.eta}", context={"eta": self.eta}
            )
        if self.groups < 2:
            raise PublicTestConfigurationError(
                f"ANOVA requiere g >= 2, recibido {self.groups}", context={"groups": self.groups}
            )

    @classmethod
    def from_means(cls, means: Sequence[float], sigma: float = 1.0) -> 'AnovaEffect':
        means_array = np.asarray(means, dtype=float)
        return cls(float(np.var(means_array) / sigma ** 2), len(means_array))

    @property
    def magnitude(self) -> float:
        return float(self.eta)

    def with_magnitude(self, magnitude: float) -> 'AnovaEffect':
        return AnovaEffect(float(magnitude), self.groups)

    def group_means(self) -> np.ndarray:
        """
        Medias de grupo centradas con varianza poblacional η: la mitad de los
        grupos en +c y la otra mitad en -c (un grupo en 0 si g es impar).
        """
        g = self.groups
        pattern = np.array([1.0] * (g // 2) + [-1.0] * (g // 2) + [0.0] * (g % 2))
        scale = math.sqrt(self.eta * g / (2 * (g // 2)))
        return pattern * scale

    def to_dict(self) -> dict:
        return {"eta": self.eta, "groups": self.groups}


@dataclass(frozen=True)
class MeanVectorEffect(EffectSpec):
    """Vector de medias μ (d componentes) del test de media multivariada."""
    mu: Tuple[float, ...]

    def __post_init__(self):
        if len(self.mu) < 1:
            raise PublicTestConfigurationError("El vector de medias requiere d >= 1")

    @classmethod
    def from_sequence(cls, mu: Sequence[float]) -> 'MeanVectorEffect':
        return cls(tuple(float(v) for v in mu))

    @classmethod
    def uniform(cls, value: float, dim: int) -> 'MeanVectorEffect':
        return cls((float(value),) * dim)

    @property
    def dim(self) -> int:
        return len(self.mu)

    @property
    def magnitude(self) -> float:
        """Norma euclídea de μ."""
        return float(np.linalg.norm(self.mu))

    def with_magnitude(self, magnitude: float) -> 'MeanVectorEffect':
        direction = np.asarray(self.mu, dtype=float)
        norm = np.linalg.norm(direction)
        if norm == 0:
            direction = np.ones(self.dim)
            norm = math.sqrt(self.dim)
        return MeanVectorEffect.from_sequence(direction / norm * magnitude)

    def noncentrality(self, n: int) -> float:
        return float(n * np.sum(np.square(self.mu)))

    def to_dict(self) -> dict:
        return {"mu": list(self.mu)}


def geometric_effect_grid(
    template: EffectSpec,
    effect_min: float,
    effect_max: float,
    length: int = 16
) -> List[EffectSpec]:
    """
    Rejilla geométrica de magnitudes entre effect_min y effect_max, con la
    forma de `template`.
    """
    if length < 1:
        return []
    if not 0 < effect_min <= effect_max:
        raise PublicTestConfigurationError(
            "La rejilla de efectos requiere 0 < effect_min <= effect_max",
            context={"effect_min": effect_min, "effect_max": effect_max}
        )
    magnitudes = np.geomspace(effect_min, effect_max, num=length)
    return [template.with_magnitude(float(value)) for value in magnitudes]
