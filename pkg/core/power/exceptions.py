"""
Excepciones del análisis de potencia y del optimizador
ToT-Privacy - Parámetros inválidos y búsquedas sin solución
"""

from typing import Any, Dict, Optional

from ..exceptions import BaseTotException, ParameterError


class PowerParameterError(ParameterError):
    """
    Parámetros de potencia fuera de rango.

    Ejemplos:
    - θ fuera de [0,1]
    - m par en la potencia del marco PB
    - δ fuera de (0,1) en la cota de Canonne
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, component="power", context=context)


class OptimizerError(BaseTotException, ValueError):
    """Búsqueda de (m, α₀) imposible (rejilla de efectos vacía, n < 1)."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, component="optimizer", context=context)
