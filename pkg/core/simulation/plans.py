"""
Planes y resultados de simulación
ToT-Privacy - SimPlan, SimResult y UniformityResult
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

from ..public_tests import PublicTest, create_test
from ..tot_engine import ToTConfig
from .exceptions import SimPlanError
from .generators import COMPATIBLE_TESTS, GeneratorSpec

ENGINES = ("tot", "public", "pb")


@dataclass(frozen=True)
class SimPlan:
    """
    Qué simular: generador, procedimiento, réplicas y semilla.

    Motores:
    - tot: el test privado completo (config obligatoria)
    - public: el test público solo, a nivel alpha
    - pb: respuesta aleatorizada con probabilidad de conservación pb_p y voto
      mayoritario (solo con el generador bernoulli; usa config.m)
    """

    generator: GeneratorSpec
    engine: str
    replicates: int
    seed: int
    config: Optional[ToTConfig] = None
    test: Optional[str] = None
    alpha: float = 0.05
    pb_p: Optional[float] = None

    def __post_init__(self):
        if self.replicates < 1:
            raise SimPlanError(f"replicates debe ser >= 1, recibido {self.replicates}",
                               context={"replicates": self.replicates})
        if self.engine not in ENGINES:
            raise SimPlanError(f"Motor desconocido: '{self.engine}'", context={"disponibles": list(ENGINES)})
        if not 0.0 < self.alpha < 1.0:
            raise SimPlanError(f"α debe estar en (0,1), recibido {self.alpha}", context={"alpha": self.alpha})

        family = self.generator.family
        if self.engine in ("tot", "pb") and self.config is None:
            raise SimPlanError(f"El motor '{self.engine}' requiere ToTConfig")
        if self.engine == "pb":
            if family != "bernoulli":
                raise SimPlanError("El motor pb solo admite el generador bernoulli", context={"generator": family})
            if self.pb_p is None or not 0.0 <= self.pb_p <= 1.0:
                raise SimPlanError("El motor pb requiere pb_p en [0,1]", context={"pb_p": self.pb_p})
            if self.config.m % 2 == 0:
                raise SimPlanError("El motor pb requiere m impar", context={"m": self.config.m})
        if self.engine == "public" and family == "bernoulli":
            raise SimPlanError("El motor public requiere un generador de datos", context={"generator": family})

        if family != "bernoulli":
            if self.test not in COMPATIBLE_TESTS[family]:
                raise SimPlanError(
                    f"El test '{self.test}' no corresponde al generador '{family}'",
                    context={"compatibles": list(COMPATIBLE_TESTS[family])}
                )
            if self.engine == "tot" and self.config.m > self.generator.n:
                raise SimPlanError("m no puede superar n", context={"m": self.config.m, "n": self.generator.n})

    def build_test(self) -> PublicTest:
        return create_test(self.test, **self.generator.test_options())

    def is_null(self) -> bool:
        alpha0 = self.config.alpha0 if self.config is not None else None
        return self.generator.is_null(alpha0)

    def rejection_level(self) -> float:
        """Nivel al que se decide el rechazo en cada réplica."""
        return self.config.alpha if self.engine == "tot" else self.alpha


@dataclass(frozen=True)
class SimResult:
    """Tasa de rechazo estimada y su error estándar binomial."""

    estimate: float
    std_error: float
    replicates: int
    seed: int

    @classmethod
    def from_counts(cls, rejections: int, replicates: int, seed: int) -> 'SimResult':
        estimate = rejections / replicates
        return cls(
            estimate=estimate,
            std_error=math.sqrt(estimate * (1.0 - estimate) / replicates),
            replicates=replicates,
            seed=seed
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "estimate": self.estimate,
            "std_error": self.std_error,
            "replicates": self.replicates,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class UniformityResult:
    """Distancia KS frente a Uniforme(0,1) y decisión al nivel dado."""

    statistic: float
    threshold: float
    passed: bool
    one_sided: bool
    replicates: int
    seed: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "statistic": self.statistic,
            "threshold": self.threshold,
            "passed": self.passed,
            "one_sided": self.one_sided,
            "replicates": self.replicates,
            "seed": self.seed,
        }
