"""
Configuraciones tipadas por componente
ToT-Privacy - Dataclasses construidas desde las secciones YAML

Los valores por defecto coinciden con config/global/system.yaml, de modo que
la librería funciona aunque no exista ningún archivo de configuración.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from .config_centralizer import ConfigManager, get_config_manager


@dataclass
class SystemSettings:
    """Configuración general: logging, valores por defecto y ejecución."""

    log_level: str = "INFO"
    log_format: str = "%(asctime)s %(levelname)s %(name)s - %(message)s"
    default_alpha: float = 0.05
    default_epsilon: float = 1.0
    default_seed: int = 20240601
    max_workers: int = 1

    @classmethod
    def from_config_dict(cls, config_dict: Dict[str, Any]) -> 'SystemSettings':
        """Crea configuración desde diccionario de configuración."""
        logging_config = config_dict.get('logging', {})
        defaults = config_dict.get('defaults', {})
        execution = config_dict.get('execution', {})
        return cls(
            log_level=str(logging_config.get('level', cls.log_level)),
            log_format=str(logging_config.get('format', cls.log_format)),
            default_alpha=float(defaults.get('alpha', cls.default_alpha)),
            default_epsilon=float(defaults.get('epsilon', cls.default_epsilon)),
            default_seed=int(defaults.get('seed', cls.default_seed)),
            max_workers=int(execution.get('max_workers', cls.max_workers))
        )


@dataclass
class PowerSettings:
    """Parámetros numéricos del análisis de potencia exacta."""

    quantile_tolerance: float = 1e-10
    bracket_tail_width: float = 50.0
    max_m_scan: int = 20000

    @classmethod
    def from_config_dict(cls, config_dict: Dict[str, Any]) -> 'PowerSettings':
        """Crea configuración desde diccionario de configuración."""
        return cls(
            quantile_tolerance=float(config_dict.get('quantile_tolerance', cls.quantile_tolerance)),
            bracket_tail_width=float(config_dict.get('bracket_tail_width', cls.bracket_tail_width)),
            max_m_scan=int(config_dict.get('max_m_scan', cls.max_m_scan))
        )


@dataclass
class OptimizerSettings:
    """Parámetros de la búsqueda de (m, α₀)."""

    alpha0_bounds: Tuple[float, float] = (1e-6, 0.999999)
    coarse_grid_points: int = 12
    geometric_fill_points: int = 24
    effect_grid_length: int = 16
    tolerance: float = 1e-4
    max_workers: int = 1

    @classmethod
    def from_config_dict(cls, config_dict: Dict[str, Any]) -> 'OptimizerSettings':
        """Crea configuración desde diccionario de configuración."""
        bounds = config_dict.get('alpha0_bounds', cls.alpha0_bounds)
        return cls(
            alpha0_bounds=(float(bounds[0]), float(bounds[1])),
            coarse_grid_points=int(config_dict.get('coarse_grid_points', cls.coarse_grid_points)),
            geometric_fill_points=int(config_dict.get('geometric_fill_points', cls.geometric_fill_points)),
            effect_grid_length=int(config_dict.get('effect_grid_length', cls.effect_grid_length)),
            tolerance=float(config_dict.get('tolerance', cls.tolerance)),
            max_workers=int(config_dict.get('max_workers', cls.max_workers))
        )


@dataclass
class SimulationSettings:
    """Parámetros del arnés Monte-Carlo."""

    chunk_size: int = 50000
    ks_level: float = 1e-3
    max_workers: int = 1

    @classmethod
    def from_config_dict(cls, config_dict: Dict[str, Any]) -> 'SimulationSettings':
        """Crea configuración desde diccionario de configuración."""
        return cls(
            chunk_size=int(config_dict.get('chunk_size', cls.chunk_size)),
            ks_level=float(config_dict.get('ks_level', cls.ks_level)),
            max_workers=int(config_dict.get('max_workers', cls.max_workers))
        )


def load_system_settings(manager: Optional[ConfigManager] = None) -> SystemSettings:
    """Carga SystemSettings desde la sección `system`."""
    manager = manager or get_config_manager()
    return SystemSettings.from_config_dict(manager.get_configuration("system"))


def load_power_settings(manager: Optional[ConfigManager] = None) -> PowerSettings:
    """Carga PowerSettings desde la sección `power`."""
    manager = manager or get_config_manager()
    return PowerSettings.from_config_dict(manager.get_configuration("power"))


def load_optimizer_settings(manager: Optional[ConfigManager] = None) -> OptimizerSettings:
    """Carga OptimizerSettings desde la sección `optimizer`."""
    manager = manager or get_config_manager()
    return OptimizerSettings.from_config_dict(manager.get_configuration("optimizer"))


def load_simulation_settings(manager: Optional[ConfigManager] = None) -> SimulationSettings:
    """Carga SimulationSettings desde la sección `simulation`."""
    manager = manager or get_config_manager()
    return SimulationSettings.from_config_dict(manager.get_configuration("simulation"))


def configure_logging(settings: Optional[SystemSettings] = None) -> None:
    """Configura el logging raíz según SystemSettings."""
    settings = settings or SystemSettings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.INFO),
        format=settings.log_format
    )
