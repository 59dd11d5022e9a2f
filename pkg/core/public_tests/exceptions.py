"""
Excepciones de los tests públicos
ToT-Privacy - Configuración inválida y familias desconocidas

Los datos insuficientes NO son una excepción: p_value devuelve None.
"""

from typing import Any, Dict, Optional

from ..exceptions import ParameterError


class PublicTestConfigurationError(ParameterError):
    """
    Test público mal configurado o usado con datos/efectos incompatibles.

    Ejemplos:
    - z-test sobre datos multivariados
    - ANOVA sin etiquetas de grupo
    - EffectSpec de una familia distinta a la del test
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, component="public_tests", context=context)


class UnknownTestFamilyError(ParameterError):
    """Familia de test no registrada."""

    def __init__(self, family: str, available: Optional[list] = None):
        self.family = family
        super().__init__(
            f"Familia de test desconocida: '{family}'",
            component="public_tests",
            context={"disponibles": available or []}
        )
