"""
Motor "Test of Tests"
=====================

Privatiza cualquier test público τ por submuestreo y agregación:

1. Partir x en m sub-bases disjuntas (particionado sembrado).
2. Ejecutar τ en cada sub-base; si τ no puede correr, el p-valor se toma de
   una Uniforme(0,1).
3. Contar a = |{p_j < α₀}|.
4. Liberar z = Tulap(a, e^{-ε}) y devolver p = P(B + N >= z).

Cambiar una fila altera a lo sumo una sub-base, y por tanto a en a lo sumo 1;
la salida depende de los datos solo a través de a.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..public_tests import Dataset, PublicTest
from .exceptions import ToTConfigurationError
from .partition import partition
from .private_binomial import private_binomial_pvalue, privatize_count

logger = logging.getLogger("tot.engine")


@dataclass(frozen=True)
class ToTConfig:
    """
    Especificación completa de una ejecución privada.
    """

    epsilon: float
    alpha: float
    m: int
    alpha0: float
    seed: int = 20240601

    def __post_init__(self):
        if not self.epsilon > 0 or math.isinf(self.epsilon):
            raise ToTConfigurationError(
                f"epsilon debe ser positivo y finito, recibido {self.epsilon}",
                context={"epsilon": self.epsilon}
            )
        if not 0.0 < self.alpha < 1.0:
            raise ToTConfigurationError(f"α debe estar en (0,1), recibido {self.alpha}", context={"alpha": self.alpha})
        if not 0.0 < self.alpha0 < 1.0:
            raise ToTConfigurationError(
                f"α₀ debe estar en (0,1), recibido {self.alpha0}", context={"alpha0": self.alpha0}
            )
        if int(self.m) != self.m or self.m < 1:
            raise ToTConfigurationError(f"m debe ser un natural >= 1, recibido {self.m}", context={"m": self.m})
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ToTConfigurationError("seed debe ser un entero de 64 bits", context={"seed": self.seed})

    @classmethod
    def from_config_dict(cls, config_dict: Dict[str, Any]) -> 'ToTConfig':
        """Crea configuración desde diccionario de configuración."""
        return cls(
            epsilon=float(config_dict['epsilon']),
            alpha=float(config_dict['alpha']),
            m=int(config_dict['m']),
            alpha0=float(config_dict['alpha0']),
            seed=int(config_dict.get('seed', cls.seed))
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def make_rng(self) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(int(self.seed)))


@dataclass(frozen=True)
class ToTResult:
    """Salida de una ejecución: z, p-valor privado, decisión y eco de la configuración."""

    z: float
    p_value: float
    reject: bool
    subtest_count_available: int
    config: ToTConfig
    n: int

    def to_dict(self) -> Dict[str, Any]:
        """Registro con orden de claves fijo."""
        return {
            "z": self.z,
            "p_value": self.p_value,
            "reject": self.reject,
            "m": self.config.m,
            "alpha0": self.config.alpha0,
            "epsilon": self.config.epsilon,
            "alpha": self.config.alpha,
            "seed": self.config.seed,
            "n": self.n,
            "subtest_count_available": self.subtest_count_available,
        }


def subset_streams(rng: np.random.Generator, m: int) -> List[np.random.SeedSequence]:
    """Una semilla hija por sub-base, derivadas de una única extracción de rng."""
    return np.random.SeedSequence(int(rng.integers(2 ** 63))).spawn(m)


def subset_pvalues(
    subsets: Sequence[Dataset],
    test: PublicTest,
    streams: Sequence[np.random.SeedSequence],
    max_workers: int = 1
) -> Tuple[np.ndarray, int]:
    """
    p-valor de τ en cada sub-base. Donde τ no puede correr se usa un
    Uniforme(0,1) del flujo propio de esa sub-base, streams[j].

    Returns:
        (p-valores en orden de sub-base, número de sub-bases donde τ corrió)
    """
    def evaluate(j: int) -> Tuple[float, bool]:
        p = test.p_value(subsets[j])
        if p is None:
            return float(np.random.default_rng(streams[j]).random()), False
        return p, True

    indices = range(len(subsets))
    if max_workers > 1 and len(subsets) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            raw = list(executor.map(evaluate, indices))
    else:
        raw = [evaluate(j) for j in indices]

    values = np.array([p for p, _ in raw], dtype=float)
    return values, sum(ran for _, ran in raw)


def count_rejections(p_values: np.ndarray, alpha0: float) -> int:
    """a = |{p_j < α₀}|."""
    return int(np.count_nonzero(np.asarray(p_values) < alpha0))


def compute_rejection_count(
    data: Dataset,
    test: PublicTest,
    config: ToTConfig,
    rng: np.random.Generator,
    max_workers: int = 1
) -> Tuple[int, int]:
    """
    Pasos 1-3: partición, sub-tests y conteo.

    Cada sub-base j tiene su propio flujo aleatorio para el uniforme de
    respaldo, así que el resultado no depende del número de hilos ni de qué
    otras sub-bases caen en el respaldo.

    Returns:
        (a, número de sub-bases donde τ corrió)
    """
    subsets = partition(data, config.m, rng)
    streams = subset_streams(rng, config.m)
    p_values, available = subset_pvalues(subsets, test, streams, max_workers)
    rejections = count_rejections(p_values, config.alpha0)
    if available < config.m:
        logger.warning(
            f"{test.name}: {config.m - available} de {config.m} sub-bases sin datos suficientes, "
            "p-valor uniforme de respaldo"
        )
    return rejections, available


def run_tot(
    data: Dataset,
    test: PublicTest,
    config: ToTConfig,
    rng: Optional[np.random.Generator] = None,
    max_workers: int = 1
) -> ToTResult:
    """
    Ejecuta el test privado completo.

    Args:
        data: Base de datos completa
        test: Test público τ
        config: (ε, α, m, α₀, seed)
        rng: Generador; si es None se deriva de config.seed
        max_workers: Hilos para evaluar los sub-tests

    Returns:
        ToTResult con reject ⇔ p_value < α

    Raises:
        PartitionError: si m > n
    """
    rng = rng if rng is not None else config.make_rng()

    rejections, available = compute_rejection_count(data, test, config, rng, max_workers)
    private_count = privatize_count(rejections, config.m, config.epsilon, rng)
    p_value = private_binomial_pvalue(private_count, config.alpha0)

    logger.debug(
        f"Ejecución ToT completada: test={test.name} n={data.n} m={config.m} "
        f"sub-tests={available} z={private_count.z:.6g} p={p_value:.6g}"
    )

    return ToTResult(
        z=private_count.z,
        p_value=p_value,
        reject=bool(p_value < config.alpha),
        subtest_count_available=available,
        config=config,
        n=data.n
    )
