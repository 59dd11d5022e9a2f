"""
Centralizador de Configuración
==============================

Carga los archivos YAML de `config/` y expone sus secciones a los
componentes del sistema. Los valores con la forma `${VARIABLE}` se expanden
desde el entorno; si la variable no existe se conserva el texto original.

Estructura esperada:
```
config/
  global/
    system.yaml     # system, power, optimizer, simulation
```

El directorio puede redefinirse con la variable de entorno TOT_CONFIG_DIR.

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import logging
import os
import re
import threading
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .exceptions import ConfigurationError

logger = logging.getLogger("tot.config")

_ENV_PATTERN = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)\}")

DEFAULT_CONFIG_DIR = Path(__file__).resolve().parent.parent.parent / "config"


def _expand_env(value: Any) -> Any:
    """Expande recursivamente `${VAR}` en strings, listas y diccionarios."""
    if isinstance(value, str):
        return _ENV_PATTERN.sub(lambda m: os.environ.get(m.group(1), m.group(0)), value)
    if isinstance(value, dict):
        return {k: _expand_env(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_expand_env(v) for v in value]
    return value


class ConfigManager:
    """
    Gestor de configuración centralizado.

    Lee una sola vez todos los YAML de `config/global` y fusiona sus claves
    de primer nivel. Es seguro para lectura concurrente.
    """

    def __init__(self, config_dir: Optional[Path] = None):
        """
        Inicializa el gestor.

        Args:
            config_dir: Directorio raíz de configuración (opcional)
        """
        env_dir = os.environ.get("TOT_CONFIG_DIR")
        self.config_dir = Path(config_dir or env_dir or DEFAULT_CONFIG_DIR)
        self._sections: Dict[str, Any] = {}
        self._loaded = False
        self._lock = threading.Lock()

    @property
    def has_files(self) -> bool:
        """True si existe el directorio global y por tanto hay YAML que validar."""
        return (self.config_dir / "global").is_dir()

    def _load(self) -> None:
        """Carga y fusiona los YAML del directorio global."""
        global_dir = self.config_dir / "global"
        sections: Dict[str, Any] = {}

        if not global_dir.is_dir():
            logger.warning(
                f"Directorio de configuración no encontrado ({global_dir}), usando valores por defecto"
            )
        else:
            for yaml_file in sorted(global_dir.glob("*.yaml")):
                try:
                    with open(yaml_file, "r", encoding="utf-8") as f:
                        data = yaml.safe_load(f) or {}
                except yaml.YAMLError as e:
                    raise ConfigurationError(
                        f"YAML inválido en {yaml_file.name}: {e!s}",
                        context={"file": str(yaml_file)}
                    ) from e

                if not isinstance(data, dict):
                    raise ConfigurationError(
                        f"El archivo {yaml_file.name} debe contener un mapeo",
                        context={"file": str(yaml_file)}
                    )
                sections.update(_expand_env(data))

        self._sections = sections
        self._loaded = True
        logger.debug(f"Configuración cargada: secciones {sorted(sections)}")

    def get_configuration(self, section: str) -> Dict[str, Any]:
        """
        Obtiene una sección de configuración.

        Args:
            section: Nombre de la sección (ej: 'optimizer')

        Returns:
            Diccionario de la sección, vacío si no existe
        """
        with self._lock:
            if not self._loaded:
                self._load()
            value = self._sections.get(section, {})
        return dict(value) if isinstance(value, dict) else {}

    def reload(self) -> None:
        """Fuerza la recarga de los archivos."""
        with self._lock:
            self._load()


_default_manager: Optional[ConfigManager] = None
_default_lock = threading.Lock()


def get_config_manager() -> ConfigManager:
    """Retorna la instancia compartida del gestor de configuración."""
    global _default_manager  # noqa: PLW0603
    with _default_lock:
        if _default_manager is None:
            _default_manager = ConfigManager()
        return _default_manager
