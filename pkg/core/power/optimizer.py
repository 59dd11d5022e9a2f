"""
Optimizador de (m, α₀)
======================

Dos regímenes:

- Efecto conocido: para cada m candidato se maximiza la potencia exacta en
  α₀ (rejilla logit gruesa + búsqueda acotada alrededor del mejor punto) y
  se elige el mejor par. θ usa el tamaño de sub-base conservador ⌊n/m⌋.
- Potencia objetivo: búsqueda binaria sobre una rejilla ascendente de
  efectos del menor efecto detectable con potencia ρ.

Los candidatos de m se evalúan en paralelo (ThreadPoolExecutor) y se
combinan por (potencia desc, m asc, α₀ asc), por lo que el resultado no
depende del orden de ejecución.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import expit, logit

from ..configuration import OptimizerSettings, PowerSettings
from ..public_tests import EffectSpec, PublicTest
from .analytic import PowerQuery, tot_power
from .exceptions import OptimizerError

logger = logging.getLogger("tot.optimizer")


@dataclass(frozen=True)
class Certificate:
    """Un par (m, α₀) evaluado durante la búsqueda."""
    m: int
    alpha0: float
    theta: float
    power: float


@dataclass(frozen=True)
class OptimizerResult:
    """
    Parámetros elegidos y potencia alcanzada.

    degenerate indica efecto nulo (la potencia no supera α); target_reached
    es None en el régimen de efecto conocido.
    """

    m: int
    alpha0: float
    achieved_power: float
    min_detectable_effect: Optional[EffectSpec] = None
    degenerate: bool = False
    target_reached: Optional[bool] = None
    certificates: Tuple[Certificate, ...] = field(default_factory=tuple, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        """Registro con orden de claves fijo (sin certificados)."""
        return {
            "m": self.m,
            "alpha0": self.alpha0,
            "achieved_power": self.achieved_power,
            "min_detectable_effect": (
                None if self.min_detectable_effect is None else self.min_detectable_effect.magnitude
            ),
            "degenerate": self.degenerate,
            "target_reached": self.target_reached,
        }


def m_candidates(n: int, fill_points: int = 24) -> List[int]:
    """
    {1, ..., ⌊√n⌋} ∪ {hasta fill_points valores geométricos hasta ⌊n/3⌋}
    ∪ {⌊n/3⌋, ⌊n/2⌋, n}, ordenado y sin repetidos.
    """
    if n < 1:
        raise OptimizerError(f"n debe ser >= 1, recibido {n}", context={"n": n})

    root = math.isqrt(n)
    third = n // 3
    candidates = set(range(1, root + 1))
    if third > root and fill_points > 0:
        candidates.update(int(v) for v in np.floor(np.geomspace(root, third, num=fill_points)))
    candidates.update((third, n // 2, n))
    return sorted(m for m in candidates if 1 <= m <= n)


def _power_for(
    test: PublicTest,
    n: int,
    effect: EffectSpec,
    epsilon: float,
    alpha: float,
    m: int,
    alpha0: float,
    power_settings: Optional[PowerSettings]
) -> Tuple[float, float]:
    theta = test.power(n // m, effect, alpha0)
    power = tot_power(PowerQuery(epsilon, alpha, m, alpha0, theta), power_settings)
    return theta, power


def _optimize_alpha0(
    test: PublicTest,
    n: int,
    effect: EffectSpec,
    epsilon: float,
    alpha: float,
    m: int,
    settings: OptimizerSettings,
    power_settings: Optional[PowerSettings]
) -> List[Certificate]:
    """Certificados de la rejilla logit y del refinamiento acotado para un m."""
    lo, hi = settings.alpha0_bounds
    grid = np.linspace(logit(lo), logit(hi), settings.coarse_grid_points)

    certificates: List[Certificate] = []
    for point in grid:
        alpha0 = float(expit(point))
        theta, power = _power_for(test, n, effect, epsilon, alpha, m, alpha0, power_settings)
        certificates.append(Certificate(m, alpha0, theta, power))

    best = max(range(len(certificates)), key=lambda k: certificates[k].power)
    left = grid[max(best - 1, 0)]
    right = grid[min(best + 1, len(grid) - 1)]
    if right > left:
        def negative_power(point: float) -> float:
            return -_power_for(test, n, effect, epsilon, alpha, m, float(expit(point)), power_settings)[1]

        refined = minimize_scalar(
            negative_power,
            bounds=(left, right),
            method="bounded",
            options={"xatol": settings.tolerance}
        )
        alpha0 = float(expit(refined.x))
        theta, power = _power_for(test, n, effect, epsilon, alpha, m, alpha0, power_settings)
        certificates.append(Certificate(m, alpha0, theta, power))

    return certificates


def _ranking_key(certificate: Certificate) -> Tuple[float, int, float]:
    return (-certificate.power, certificate.m, certificate.alpha0)


def optimize_known_effect(
    test: PublicTest,
    n: int,
    effect: Union[EffectSpec, float],
    epsilon: float,
    alpha: float,
    settings: Optional[OptimizerSettings] = None,
    power_settings: Optional[PowerSettings] = None
) -> OptimizerResult:
    """
    (m, α₀) que maximizan la potencia exacta del ToT para un efecto dado.

    Args:
        test: Test público τ con potencia analítica
        n: Tamaño total de la base
        effect: Efecto bajo la alternativa
        epsilon: Presupuesto de privacidad
        alpha: Nivel del test privado

    Returns:
        OptimizerResult con todos los pares evaluados como certificados
    """
    settings = settings or OptimizerSettings()
    effect = test.coerce_effect(effect)
    candidates = m_candidates(n, settings.geometric_fill_points)

    def evaluate(m: int) -> List[Certificate]:
        return _optimize_alpha0(test, n, effect, epsilon, alpha, m, settings, power_settings)

    if settings.max_workers > 1:
        with ThreadPoolExecutor(max_workers=settings.max_workers) as executor:
            per_m = list(executor.map(evaluate, candidates))
    else:
        per_m = [evaluate(m) for m in candidates]

    certificates = tuple(c for group in per_m for c in group)
    best = min(certificates, key=_ranking_key)
    degenerate = effect.magnitude == 0

    logger.info(
        f"Optimización con efecto conocido completada: test={test.name} n={n} m={best.m} "
        f"α₀={best.alpha0:.6g} potencia={best.power:.6g} candidatos={len(candidates)}"
    )

    return OptimizerResult(
        m=best.m,
        alpha0=best.alpha0,
        achieved_power=best.power,
        degenerate=degenerate,
        certificates=certificates
    )


def optimize_target_power(
    test: PublicTest,
    n: int,
    epsilon: float,
    alpha: float,
    rho: float,
    effect_grid: Sequence[EffectSpec],
    settings: Optional[OptimizerSettings] = None,
    power_settings: Optional[PowerSettings] = None
) -> OptimizerResult:
    """
    Menor efecto de la rejilla detectable con potencia ρ, por búsqueda
    binaria sobre los índices, y sus parámetros (m, α₀).

    Si ni el mayor efecto alcanza ρ, devuelve su óptimo con
    target_reached=False.

    Raises:
        OptimizerError: si la rejilla está vacía
    """
    if len(effect_grid) == 0:
        raise OptimizerError("La rejilla de efectos está vacía")

    cache: Dict[int, OptimizerResult] = {}

    def result_at(index: int) -> OptimizerResult:
        if index not in cache:
            cache[index] = optimize_known_effect(
                test, n, effect_grid[index], epsilon, alpha, settings, power_settings
            )
        return cache[index]

    last = len(effect_grid) - 1
    if result_at(last).achieved_power < rho:
        largest = result_at(last)
        logger.info(
            f"Ningún efecto de la rejilla alcanza la potencia objetivo: n={n} ρ={rho} "
            f"potencia máxima={largest.achieved_power:.6g}"
        )
        return OptimizerResult(
            m=largest.m,
            alpha0=largest.alpha0,
            achieved_power=largest.achieved_power,
            min_detectable_effect=None,
            degenerate=largest.degenerate,
            target_reached=False,
            certificates=largest.certificates
        )

    low, high = 0, last
    while low < high:
        middle = (low + high) // 2
        if result_at(middle).achieved_power >= rho:
            high = middle
        else:
            low = middle + 1

    found = result_at(low)
    return OptimizerResult(
        m=found.m,
        alpha0=found.alpha0,
        achieved_power=found.achieved_power,
        min_detectable_effect=effect_grid[low],
        degenerate=found.degenerate,
        target_reached=True,
        certificates=found.certificates
    )


def power_at(
    params: Union[OptimizerResult, Tuple[int, float]],
    test: PublicTest,
    n: int,
    effect: Union[EffectSpec, float],
    epsilon: float,
    alpha: float,
    power_settings: Optional[PowerSettings] = None
) -> float:
    """Potencia exacta de un (m, α₀) fijo con otro n o efecto."""
    if isinstance(params, OptimizerResult):
        m, alpha0 = params.m, params.alpha0
    else:
        m, alpha0 = int(params[0]), float(params[1])
    if m > n:
        raise OptimizerError("m no puede superar n", context={"m": m, "n": n})
    return _power_for(test, n, test.coerce_effect(effect), epsilon, alpha, m, alpha0, power_settings)[1]
