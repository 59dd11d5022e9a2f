"""Configuración centralizada del sistema ToT-Privacy."""

from .config_centralizer import ConfigManager, get_config_manager
from .exceptions import ConfigurationError
from .settings import (
    OptimizerSettings,
    PowerSettings,
    SimulationSettings,
    SystemSettings,
    configure_logging,
    load_optimizer_settings,
    load_power_settings,
    load_simulation_settings,
    load_system_settings,
)
from .validator import ConfigValidator

__all__ = [
    "ConfigManager",
    "ConfigValidator",
    "ConfigurationError",
    "OptimizerSettings",
    "PowerSettings",
    "SimulationSettings",
    "SystemSettings",
    "configure_logging",
    "get_config_manager",
    "load_optimizer_settings",
    "load_power_settings",
    "load_simulation_settings",
    "load_system_settings",
]
