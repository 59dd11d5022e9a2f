"""
Excepciones de la CLI
ToT-Privacy - Entradas mal formadas
"""

from typing import Any, Dict, Optional

from ..exceptions import ParameterError


class InputFormatError(ParameterError):
    """
    Archivo o especificación de entrada mal formados.

    Ejemplos:
    - CSV sin la columna `value`
    - columnas x1..xd incompletas para el test multivariado
    - rejilla con claves desconocidas o valores no numéricos
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, component="cli", context=context)
