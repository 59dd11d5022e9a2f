"""
Fixtures compartidas de la suite ToT-Privacy.
"""

import math

import numpy as np
import pytest

from core.configuration import OptimizerSettings, SimulationSettings


def mc_band(p: float, replicates: int, sigmas: float = 4.0) -> float:
    """Semiancho de la banda Monte-Carlo para una proporción p."""
    return sigmas * math.sqrt(max(p * (1.0 - p), 1e-12) / replicates)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def sim_settings():
    return SimulationSettings(chunk_size=10000, ks_level=1e-3, max_workers=1)


@pytest.fixture
def fast_optimizer_settings():
    return OptimizerSettings(coarse_grid_points=6, geometric_fill_points=6)
