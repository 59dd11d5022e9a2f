"""
Tests públicos enchufables: z, t, ANOVA y media multivariada.
"""

from .anova import AnovaTest, anova_power, anova_pvalue
from .base import Dataset, PublicTest
from .effects import AnovaEffect, EffectSpec, MeanVectorEffect, ScalarEffect, geometric_effect_grid
from .exceptions import PublicTestConfigurationError, UnknownTestFamilyError
from .mvn_mean import MvnMeanTest, mvn_mean_power, mvn_mean_pvalue
from .registry import TEST_FAMILIES, available_families, create_test
from .ttest import TTest, ttest_power, ttest_pvalue
from .ztest import ZTest, ztest_power, ztest_pvalue

__all__ = [
    'TEST_FAMILIES',
    'AnovaEffect',
    'AnovaTest',
    'Dataset',
    'EffectSpec',
    'MeanVectorEffect',
    'MvnMeanTest',
    'PublicTest',
    'PublicTestConfigurationError',
    'ScalarEffect',
    'TTest',
    'UnknownTestFamilyError',
    'ZTest',
    'anova_power',
    'anova_pvalue',
    'available_families',
    'create_test',
    'geometric_effect_grid',
    'mvn_mean_power',
    'mvn_mean_pvalue',
    'ttest_power',
    'ttest_pvalue',
    'ztest_power',
    'ztest_pvalue',
]
