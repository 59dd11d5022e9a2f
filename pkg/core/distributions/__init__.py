"""
Capa de funciones especiales: Tulap, binomial, Poisson-binomial,
no centrales y convolución normal-Laplace.
"""

from .binomial import (
    SuccessVector,
    binomial_pmf_cdf,
    binomial_pmf_vector,
    poisson_binomial_pmf,
    poisson_binomial_pmf_vector,
    poisson_binomial_sf,
)
from .exceptions import DistributionDomainError, DistributionParameterError, UnboundedQuantileError
from .noncentral import NoncentralFamily, NoncentralParams, noncentral_cdf, noncentral_sf
from .normal_laplace import normal_laplace_cdf, normal_laplace_cdf_closed
from .tulap import (
    TulapParams,
    interval_mass,
    tulap_cdf,
    tulap_pdf,
    tulap_quantile,
    tulap_sample,
    tulap_sf,
)

__all__ = [
    'DistributionDomainError',
    'DistributionParameterError',
    'NoncentralFamily',
    'NoncentralParams',
    'SuccessVector',
    'TulapParams',
    'UnboundedQuantileError',
    'binomial_pmf_cdf',
    'binomial_pmf_vector',
    'interval_mass',
    'noncentral_cdf',
    'noncentral_sf',
    'normal_laplace_cdf',
    'normal_laplace_cdf_closed',
    'poisson_binomial_pmf',
    'poisson_binomial_pmf_vector',
    'poisson_binomial_sf',
    'tulap_cdf',
    'tulap_pdf',
    'tulap_quantile',
    'tulap_sample',
    'tulap_sf',
]
