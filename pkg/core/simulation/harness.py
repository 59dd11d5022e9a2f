"""
Arnés Monte-Carlo
=================

Estima tasas de rechazo (potencia o error Tipo I) y la uniformidad de los
p-valores para cualquier combinación (test, configuración, generador). Es el
oráculo que valida cada fórmula analítica del repositorio.

Reproducibilidad:
- Motores con datos: la réplica r usa el generador derivado de
  SeedSequence([seed, r]).
- Motores bernoulli (vectorizados): el bloque c de chunk_size réplicas usa
  SeedSequence([seed, c]); la división en bloques depende solo de
  chunk_size.
En ambos casos el resultado no depende del número de hilos.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence

import numpy as np
from scipy.stats import kstest, kstwobign

from ..configuration import SimulationSettings
from ..public_tests import PublicTest
from ..tot_engine import binomial_tulap_sf, privatize_counts, run_tot
from .exceptions import SimPlanError
from .generators import generate
from .plans import SimPlan, SimResult, UniformityResult

logger = logging.getLogger("tot.simulation")


def replicate_rng(seed: int, replicate: int) -> np.random.Generator:
    """Generador independiente para la réplica (o bloque) indicado."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(replicate)]))


def _chunks(replicates: int, chunk_size: int) -> List[int]:
    full, rest = divmod(replicates, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def _map(function: Callable, items: Sequence, max_workers: int) -> list:
    if max_workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            return list(executor.map(function, items))
    return [function(item) for item in items]


def _replicate_pvalue(plan: SimPlan, test: PublicTest, replicate: int) -> float:
    """p-valor de una réplica con datos (motores tot y public)."""
    rng = replicate_rng(plan.seed, replicate)
    data = generate(plan.generator, rng)
    if plan.engine == "tot":
        return run_tot(data, test, plan.config, rng).p_value
    p_value = test.p_value(data)
    return float(rng.random()) if p_value is None else p_value


def _bernoulli_tot_pvalues(plan: SimPlan, size: int, rng: np.random.Generator) -> np.ndarray:
    """p-valores privados con sub-tests sintéticos que rechazan con prob. θ."""
    config = plan.config
    rejections = rng.binomial(config.m, plan.generator.theta, size=size)
    z = privatize_counts(rejections, config.m, config.epsilon, rng)
    return np.asarray(binomial_tulap_sf(z, config.m, config.alpha0, config.epsilon))


def _bernoulli_pb_rejections(plan: SimPlan, size: int, rng: np.random.Generator) -> int:
    """Respuesta aleatorizada por decisión y voto mayoritario W > (m-1)/2."""
    m = plan.config.m
    keep = plan.pb_p
    rejections = rng.binomial(m, plan.generator.theta, size=size)
    published = rng.binomial(rejections, keep) + rng.binomial(m - rejections, 1.0 - keep)
    return int(np.count_nonzero(published > (m - 1) / 2))


def collect_pvalues(plan: SimPlan, settings: Optional[SimulationSettings] = None) -> np.ndarray:
    """
    p-valores de todas las réplicas, en orden de réplica.

    Raises:
        SimPlanError: con el motor pb, que no produce p-valores
    """
    settings = settings or SimulationSettings()
    if plan.engine == "pb":
        raise SimPlanError("El motor pb decide por voto mayoritario y no produce p-valores")

    if plan.generator.produces_data:
        test = plan.build_test()
        values = _map(lambda r: _replicate_pvalue(plan, test, r), range(plan.replicates), settings.max_workers)
        return np.asarray(values, dtype=float)

    sizes = _chunks(plan.replicates, settings.chunk_size)
    blocks = _map(
        lambda c: _bernoulli_tot_pvalues(plan, sizes[c], replicate_rng(plan.seed, c)),
        range(len(sizes)),
        settings.max_workers
    )
    return np.concatenate(blocks)


def estimate_rejection_rate(plan: SimPlan, settings: Optional[SimulationSettings] = None) -> SimResult:
    """
    Fracción de réplicas que rechazan al nivel configurado.

    Args:
        plan: Plan de simulación validado
        settings: Tamaño de bloque e hilos

    Returns:
        SimResult con error estándar √(p(1-p)/R)
    """
    settings = settings or SimulationSettings()

    if plan.engine == "pb":
        sizes = _chunks(plan.replicates, settings.chunk_size)
        counts = _map(
            lambda c: _bernoulli_pb_rejections(plan, sizes[c], replicate_rng(plan.seed, c)),
            range(len(sizes)),
            settings.max_workers
        )
        rejections = int(sum(counts))
    else:
        p_values = collect_pvalues(plan, settings)
        rejections = int(np.count_nonzero(p_values < plan.rejection_level()))

    result = SimResult.from_counts(rejections, plan.replicates, plan.seed)
    logger.info(
        f"Simulación completada: motor={plan.engine} generador={plan.generator.family} "
        f"réplicas={plan.replicates} estimación={result.estimate:.6g}"
    )
    return result


def estimate_pvalue_uniformity(
    plan: SimPlan,
    level: Optional[float] = None,
    one_sided: Optional[bool] = None,
    settings: Optional[SimulationSettings] = None
) -> UniformityResult:
    """
    Distancia KS de los p-valores a la Uniforme(0,1) bajo H₀.

    Bilateral (por defecto con el test público): umbral
    K⁻¹(1 - level)/√R con K la distribución de Kolmogorov. Unilateral (por
    defecto con el motor tot): solo se exige súper-uniformidad,
    F_emp(x) <= x + √(-ln(level)/(2R)).

    Raises:
        SimPlanError: si el generador no está bajo H₀
    """
    settings = settings or SimulationSettings()
    if not plan.is_null():
        raise SimPlanError(
            "La uniformidad solo tiene sentido bajo H₀",
            context={"generator": plan.generator.family}
        )

    level = settings.ks_level if level is None else level
    one_sided = plan.engine == "tot" if one_sided is None else one_sided
    p_values = collect_pvalues(plan, settings)
    replicates = p_values.size

    if one_sided:
        statistic = float(kstest(p_values, "uniform", alternative="greater").statistic)
        threshold = math.sqrt(-math.log(level) / (2.0 * replicates))
    else:
        statistic = float(kstest(p_values, "uniform").statistic)
        threshold = float(kstwobign.isf(level)) / math.sqrt(replicates)

    return UniformityResult(
        statistic=statistic,
        threshold=threshold,
        passed=statistic <= threshold,
        one_sided=one_sided,
        replicates=replicates,
        seed=plan.seed
    )
