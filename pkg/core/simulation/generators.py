"""
Generadores de datos
ToT-Privacy - N(μ,1), ANOVA con η, N(μ, I_d) y decisiones Bernoulli

Los tres primeros producen Dataset para los tests públicos; `bernoulli`
representa un sub-test sintético que rechaza i.i.d. con probabilidad θ y
no genera datos (lo consumen directamente los motores vectorizados).
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..public_tests import AnovaEffect, Dataset, EffectSpec, MeanVectorEffect, ScalarEffect
from .exceptions import SimPlanError

GENERATOR_FAMILIES = ("normal", "anova", "mvn", "bernoulli")

# Familias de test compatibles con cada generador de datos
COMPATIBLE_TESTS = {
    "normal": ("z", "t"),
    "anova": ("anova",),
    "mvn": ("mvn-mean",),
}


@dataclass(frozen=True)
class GeneratorSpec:
    """
    Familia, tamaño y efecto del generador.

    Para `bernoulli`, theta es la probabilidad de rechazo de cada sub-test y
    n no se usa.
    """

    family: str
    n: int = 1
    effect: Optional[EffectSpec] = None
    theta: Optional[float] = None

    def __post_init__(self):
        if self.family not in GENERATOR_FAMILIES:
            raise SimPlanError(
                f"Generador desconocido: '{self.family}'",
                context={"disponibles": list(GENERATOR_FAMILIES)}
            )
        if self.family == "bernoulli":
            if self.theta is None or not 0.0 <= self.theta <= 1.0:
                raise SimPlanError("El generador bernoulli requiere θ en [0,1]", context={"theta": self.theta})
            return
        if self.n < 1:
            raise SimPlanError(f"n debe ser >= 1, recibido {self.n}", context={"n": self.n})

        expected = {"normal": ScalarEffect, "anova": AnovaEffect, "mvn": MeanVectorEffect}[self.family]
        if not isinstance(self.effect, expected):
            raise SimPlanError(
                f"El generador '{self.family}' requiere un {expected.__name__}",
                context={"effect": self.effect}
            )

    @classmethod
    def normal(cls, n: int, effect: float = 0.0) -> 'GeneratorSpec':
        return cls("normal", n, ScalarEffect(effect))

    @classmethod
    def anova(cls, n: int, eta: float, groups: int) -> 'GeneratorSpec':
        return cls("anova", n, AnovaEffect(eta, groups))

    @classmethod
    def mvn(cls, n: int, mu) -> 'GeneratorSpec':
        return cls("mvn", n, MeanVectorEffect.from_sequence(mu))

    @classmethod
    def bernoulli(cls, theta: float) -> 'GeneratorSpec':
        return cls("bernoulli", theta=theta)

    @property
    def produces_data(self) -> bool:
        return self.family != "bernoulli"

    def is_null(self, alpha0: Optional[float] = None) -> bool:
        """True si los datos se generan bajo H₀."""
        if self.family == "bernoulli":
            return alpha0 is not None and self.theta <= alpha0
        return self.effect.magnitude == 0

    def test_options(self) -> Dict[str, Any]:
        """Argumentos para create_test (grupos o dimensión)."""
        if self.family == "anova":
            return {"groups": self.effect.groups}
        if self.family == "mvn":
            return {"dim": self.effect.dim}
        return {}

    def to_dict(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {"generator": self.family, "n": self.n}
        if self.effect is not None:
            record.update(self.effect.to_dict())
        if self.theta is not None:
            record["theta"] = self.theta
        return record


def generate(spec: GeneratorSpec, rng: np.random.Generator) -> Dataset:
    """
    Genera una base de datos según spec.

    Raises:
        SimPlanError: si el generador no produce datos (bernoulli)
    """
    if spec.family == "normal":
        return Dataset.univariate(rng.normal(spec.effect.size, 1.0, size=spec.n))

    if spec.family == "anova":
        g = spec.effect.groups
        labels = np.arange(spec.n) % g
        means = spec.effect.group_means()
        values = rng.normal(means[labels], 1.0)
        return Dataset.univariate(values, group_labels=labels)

    if spec.family == "mvn":
        mu = np.asarray(spec.effect.mu, dtype=float)
        return Dataset(rng.normal(size=(spec.n, mu.size)) + mu)

    raise SimPlanError("El generador bernoulli no produce datos", context={"family": spec.family})
