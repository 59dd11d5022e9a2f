"""
Excepciones de la capa de distribuciones
ToT-Privacy - Errores de parámetros y dominio de funciones especiales
"""

from typing import Any, Dict, Optional

from ..exceptions import BaseTotException, ParameterError


class DistributionParameterError(ParameterError):
    """
    Parámetro de distribución inválido.

    Ejemplos:
    - Escala Tulap fuera de (0,1)
    - Noncentralidad negativa
    - Grados de libertad no positivos
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, component="distributions", context=context)


class DistributionDomainError(ParameterError):
    """
    Argumento fuera del soporte de la función.

    Ejemplos:
    - Índice i fuera de 0..m en una pmf binomial
    - j fuera de 0..len(vector) en la Poisson-binomial
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, component="distributions", context=context)


class UnboundedQuantileError(BaseTotException, ValueError):
    """
    Cuantil pedido en p ∈ {0, 1}, donde no es finito.
    """

    def __init__(self, probability: float, context: Optional[Dict[str, Any]] = None):
        self.probability = probability
        context = dict(context or {})
        context["p"] = probability
        super().__init__(
            "El cuantil no está acotado para p fuera de (0,1)",
            component="distributions",
            context=context
        )
