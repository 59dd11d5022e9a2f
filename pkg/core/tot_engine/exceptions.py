"""
Excepciones del motor ToT
ToT-Privacy - Configuración de ejecución y particionado
"""

from typing import Any, Dict, Optional

from ..exceptions import ParameterError


class ToTConfigurationError(ParameterError):
    """
    Parámetros (ε, α, m, α₀) fuera de rango.

    Ejemplos:
    - ε <= 0
    - α o α₀ fuera de (0,1)
    - m < 1
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, component="tot_engine", context=context)


class PartitionError(ParameterError):
    """No se puede dividir n filas en m subconjuntos no vacíos (m < 1 o m > n)."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, component="tot_engine", context=context)
