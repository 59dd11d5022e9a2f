"""
Análisis de potencia: potencia exacta del ToT, multiplicadores de tamaño
muestral, marco PB, cota de Canonne y optimizador de (m, α₀).
"""

from .analytic import (
    PowerQuery,
    bn_cdf,
    bn_quantile,
    min_m_for_power,
    sample_size_multipliers,
    scaling_check,
    tot_power,
)
from .canonne import (
    CanonneQuery,
    canonne_laplace_scale,
    canonne_reject_threshold,
    canonne_sensitivity,
    canonne_type1_lower_bound,
)
from .exceptions import OptimizerError, PowerParameterError
from .optimizer import (
    Certificate,
    OptimizerResult,
    m_candidates,
    optimize_known_effect,
    optimize_target_power,
    power_at,
)
from .pb import pb_dominance_check, pb_level, pb_power, randomized_response_keep_probability

__all__ = [
    'CanonneQuery',
    'Certificate',
    'OptimizerError',
    'OptimizerResult',
    'PowerParameterError',
    'PowerQuery',
    'bn_cdf',
    'bn_quantile',
    'canonne_laplace_scale',
    'canonne_reject_threshold',
    'canonne_sensitivity',
    'canonne_type1_lower_bound',
    'm_candidates',
    'min_m_for_power',
    'optimize_known_effect',
    'optimize_target_power',
    'pb_dominance_check',
    'pb_level',
    'pb_power',
    'power_at',
    'randomized_response_keep_probability',
    'sample_size_multipliers',
    'scaling_check',
    'tot_power',
]
