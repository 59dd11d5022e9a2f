"""
Arnés Monte-Carlo sembrado: generadores, planes y estimadores.
"""

from .exceptions import SimPlanError
from .generators import COMPATIBLE_TESTS, GENERATOR_FAMILIES, GeneratorSpec, generate
from .harness import collect_pvalues, estimate_pvalue_uniformity, estimate_rejection_rate, replicate_rng
from .plans import ENGINES, SimPlan, SimResult, UniformityResult

__all__ = [
    'COMPATIBLE_TESTS',
    'ENGINES',
    'GENERATOR_FAMILIES',
    'GeneratorSpec',
    'SimPlan',
    'SimPlanError',
    'SimResult',
    'UniformityResult',
    'collect_pvalues',
    'estimate_pvalue_uniformity',
    'estimate_rejection_rate',
    'generate',
    'replicate_rng',
]
