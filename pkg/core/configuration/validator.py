"""
Validador de configuración
ToT-Privacy - Verificación de secciones y rangos de los YAML
"""

from typing import Any, Dict, List, Optional

from .config_centralizer import ConfigManager, get_config_manager
from .exceptions import ConfigurationError


class ConfigValidator:
    """Verifica que las secciones de configuración estén completas y en rango."""

    # Estructura esperada según config/global/system.yaml
    EXPECTED_SECTIONS: Dict[str, List[str]] = {
        'system': ['logging', 'defaults', 'execution'],
        'power': ['quantile_tolerance', 'bracket_tail_width', 'max_m_scan'],
        'optimizer': [
            'alpha0_bounds',
            'coarse_grid_points',
            'geometric_fill_points',
            'effect_grid_length',
            'tolerance'
        ],
        'simulation': ['chunk_size', 'ks_level'],
    }

    def __init__(self, manager: Optional[ConfigManager] = None):
        self.manager = manager or get_config_manager()

    def validate(self) -> List[str]:
        """
        Valida todas las secciones.

        Returns:
            Lista de problemas encontrados (vacía si todo es válido)
        """
        issues: List[str] = []

        for section_name, expected_fields in self.EXPECTED_SECTIONS.items():
            section = self.manager.get_configuration(section_name)
            if not section:
                issues.append(f"Sección '{section_name}' faltante")
                continue

            missing_fields = [f for f in expected_fields if f not in section]
            if missing_fields:
                issues.append(f"Sección '{section_name}': campos faltantes: {missing_fields}")

        issues.extend(self._check_ranges())
        return issues

    def _check_ranges(self) -> List[str]:
        """Verifica valores específicos."""
        issues: List[str] = []

        defaults = self.manager.get_configuration('system').get('defaults', {})
        alpha = defaults.get('alpha')
        if alpha is not None and not 0 < float(alpha) < 1:
            issues.append(f"system.defaults.alpha debe estar en (0,1), actual: {alpha}")
        epsilon = defaults.get('epsilon')
        if epsilon is not None and float(epsilon) <= 0:
            issues.append(f"system.defaults.epsilon debe ser positivo, actual: {epsilon}")

        optimizer = self.manager.get_configuration('optimizer')
        bounds: Any = optimizer.get('alpha0_bounds')
        if bounds is not None:
            if len(bounds) != 2 or not 0 < float(bounds[0]) < float(bounds[1]) < 1:
                issues.append(f"optimizer.alpha0_bounds debe cumplir 0 < lo < hi < 1, actual: {bounds}")
        grid_length = optimizer.get('effect_grid_length')
        if grid_length is not None and int(grid_length) < 1:
            issues.append(f"optimizer.effect_grid_length debe ser positivo, actual: {grid_length}")

        power = self.manager.get_configuration('power')
        tolerance = power.get('quantile_tolerance')
        if tolerance is not None and float(tolerance) <= 0:
            issues.append(f"power.quantile_tolerance debe ser positivo, actual: {tolerance}")

        simulation = self.manager.get_configuration('simulation')
        ks_level = simulation.get('ks_level')
        if ks_level is not None and not 0 < float(ks_level) < 1:
            issues.append(f"simulation.ks_level debe estar en (0,1), actual: {ks_level}")

        return issues

    def require_valid(self) -> None:
        """Lanza ConfigurationError si hay problemas."""
        issues = self.validate()
        if issues:
            raise ConfigurationError("Configuración inválida", issues=issues)
