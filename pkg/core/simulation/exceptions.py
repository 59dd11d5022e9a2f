"""
Excepciones del arnés de simulación
ToT-Privacy - Planes inconsistentes
"""

from typing import Any, Dict, Optional

from ..exceptions import ParameterError


class SimPlanError(ParameterError):
    """
    Plan de simulación inválido.

    Ejemplos:
    - replicates < 1
    - generador incompatible con el motor (bernoulli con el test público)
    - uniformidad pedida con un generador bajo la alternativa
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, component="simulation", context=context)
