"""
Excepciones del sistema de configuración
ToT-Privacy - Errores de carga y validación de YAML
"""

from typing import Any, Dict, List, Optional

from ..exceptions import BaseTotException


class ConfigurationError(BaseTotException):
    """
    Excepción lanzada cuando la configuración no puede cargarse o es inválida.

    Ejemplos:
    - Archivo YAML malformado
    - Sección requerida faltante
    - Valores fuera de rango
    """

    def __init__(
        self,
        message: str,
        issues: Optional[List[str]] = None,
        context: Optional[Dict[str, Any]] = None
    ):
        self.issues = issues or []
        context = dict(context or {})
        if self.issues:
            context["issues"] = "; ".join(self.issues)
        super().__init__(message, component="configuration", context=context)
