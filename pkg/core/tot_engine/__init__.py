"""
Motor ToT: test binomial privado, particionado y ejecución del algoritmo.
"""

from .engine import (
    ToTConfig,
    ToTResult,
    compute_rejection_count,
    count_rejections,
    run_tot,
    subset_pvalues,
    subset_streams,
)
from .exceptions import PartitionError, ToTConfigurationError
from .partition import partition, partition_indices
from .private_binomial import (
    PrivateCount,
    binomial_tulap_cdf,
    binomial_tulap_sf,
    private_binomial_pvalue,
    privatize_count,
    privatize_counts,
)

__all__ = [
    'PartitionError',
    'PrivateCount',
    'ToTConfig',
    'ToTConfigurationError',
    'ToTResult',
    'binomial_tulap_cdf',
    'binomial_tulap_sf',
    'compute_rejection_count',
    'count_rejections',
    'partition',
    'partition_indices',
    'private_binomial_pvalue',
    'privatize_count',
    'privatize_counts',
    'run_tot',
    'subset_pvalues',
    'subset_streams',
]
