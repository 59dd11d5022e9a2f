"""
Excepción raíz del sistema ToT
==============================

Todas las excepciones de los subpaquetes (distribuciones, tests públicos,
motor ToT, potencia, simulación, configuración y CLI) heredan de
BaseTotException, que agrega contexto estructurado al mensaje.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

from typing import Any, Dict, Optional


class BaseTotException(Exception):
    """
    Excepción base para todo el sistema.

    Proporciona mensaje, componente de origen y un diccionario de contexto
    que se incorpora al texto final de la excepción.
    """

    def __init__(
        self,
        message: str,
        component: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.component = component
        self.context = context or {}

        full_message = self._build_full_message()
        super().__init__(full_message)

    def _build_full_message(self) -> str:
        """Construye el mensaje completo de error con contexto."""
        parts = [self.message]

        if self.component:
            parts.append(f"Componente: {self.component}")

        if self.context:
            context_str = ", ".join([f"{k}={v}" for k, v in self.context.items()])
            parts.append(f"Contexto: {context_str}")

        return " | ".join(parts)

    def to_dict(self) -> Dict[str, Any]:
        """Convierte la excepción a diccionario para diagnóstico."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "component": self.component,
            "context": self.context,
        }


class ParameterError(BaseTotException, ValueError):
    """
    Parámetro fuera de su dominio válido.

    Hereda también de ValueError para que código genérico pueda capturarla.
    """
    pass
