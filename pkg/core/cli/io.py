"""
Entrada/salida de la CLI
========================

- CSV de entrada (UTF-8, coma, con cabecera): `value` para z/t, `value` y
  `group` para ANOVA, `x1..xd` para el test multivariado.
- JSON de salida con orden de claves fijo y flotantes con 17 dígitos
  significativos.
- Tablas CSV de salida escritas y leídas con pandas.
- Rejillas de parámetros: YAML o definición en línea
  "clave=v1,v2;clave2=v3" (producto cartesiano).

Autor: Sistema ToT-Privacy
Fecha: 2025
"""

import itertools
import json
import math
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import numpy as np
import pandas as pd
import yaml

from ..public_tests import Dataset
from .exceptions import InputFormatError

MVN_COLUMN = re.compile(r"^x(\d+)$")


def read_dataset(path: str, family: str) -> Dataset:
    """
    Lee la base de datos según el contrato de la familia de test.

    Raises:
        InputFormatError: si el archivo no existe, no parsea o le faltan columnas
    """
    try:
        frame = pd.read_csv(path, encoding="utf-8")
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise InputFormatError(f"No se pudo leer el CSV: {e}", context={"path": path}) from e

    if family == "mvn-mean":
        indexed = sorted(
            (int(match.group(1)), column)
            for column in frame.columns
            if (match := MVN_COLUMN.match(str(column)))
        )
        if not indexed or [i for i, _ in indexed] != list(range(1, len(indexed) + 1)):
            raise InputFormatError(
                "El test multivariado requiere columnas x1..xd contiguas",
                context={"columns": list(frame.columns)}
            )
        columns = [column for _, column in indexed]
    else:
        if "value" not in frame.columns:
            raise InputFormatError("Falta la columna 'value'", context={"columns": list(frame.columns)})
        columns = ["value"]

    try:
        values = frame[columns].apply(pd.to_numeric, errors="raise").to_numpy(dtype=float)
    except (ValueError, TypeError) as e:
        raise InputFormatError(f"Valores no numéricos: {e}", context={"path": path}) from e
    if not np.all(np.isfinite(values)):
        raise InputFormatError("Valores faltantes o no finitos", context={"path": path})

    labels = None
    if family == "anova":
        if "group" not in frame.columns:
            raise InputFormatError("ANOVA requiere la columna 'group'", context={"columns": list(frame.columns)})
        if frame["group"].isna().any():
            raise InputFormatError("Etiquetas de grupo faltantes", context={"path": path})
        labels = frame["group"].astype(str).to_numpy()

    return Dataset(values, labels)


def _format_value(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value) or math.isinf(value):
            return "null"
        return f"{value:.17g}"
    if isinstance(value, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_format_value(v) for v in value) + "]"
    if isinstance(value, Mapping):
        return format_json(value)
    return json.dumps(str(value))


def format_json(record: Mapping[str, Any]) -> str:
    """Objeto JSON en el orden de inserción de record, flotantes a 17 dígitos."""
    items = ", ".join(f"{json.dumps(str(key))}: {_format_value(value)}" for key, value in record.items())
    return "{" + items + "}"


def write_json(record: Mapping[str, Any], path: Optional[str] = None) -> None:
    text = format_json(record) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def write_table(frame: pd.DataFrame, path: Optional[str] = None) -> None:
    """CSV con cabecera y flotantes a 17 dígitos significativos."""
    if path is None:
        frame.to_csv(sys.stdout, float_format="%.17g", index=False)
    else:
        frame.to_csv(path, float_format="%.17g", index=False, encoding="utf-8")


def read_table(path: str) -> pd.DataFrame:
    """Lee una tabla escrita por write_table."""
    try:
        return pd.read_csv(path, encoding="utf-8")
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise InputFormatError(f"No se pudo leer la tabla: {e}", context={"path": path}) from e


def _as_number(key: str, raw: Any) -> float:
    try:
        return float(raw)
    except (TypeError, ValueError):
        raise InputFormatError(f"Valor no numérico para '{key}': {raw!r}") from None


def _expand(axes: Mapping[str, List[Any]], allowed: Optional[List[str]]) -> List[Dict[str, float]]:
    if not axes:
        raise InputFormatError("La rejilla está vacía")
    if allowed is not None:
        unknown = sorted(set(axes) - set(allowed))
        if unknown:
            raise InputFormatError(f"Claves de rejilla desconocidas: {unknown}", context={"permitidas": allowed})

    keys = list(axes)
    values = []
    for key in keys:
        raw = axes[key]
        raw = raw if isinstance(raw, (list, tuple)) else [raw]
        if len(raw) == 0:
            raise InputFormatError(f"La clave '{key}' no tiene valores")
        values.append([_as_number(key, v) for v in raw])
    return [dict(zip(keys, combination)) for combination in itertools.product(*values)]


def parse_grid(grid: str, allowed: Optional[List[str]] = None) -> List[Dict[str, float]]:
    """
    Puntos de la rejilla, en orden de producto cartesiano.

    Args:
        grid: Ruta a un YAML (mapa clave -> lista) o "clave=v1,v2;clave2=v3"
        allowed: Claves válidas; None acepta cualquiera

    Raises:
        InputFormatError: si la rejilla no se puede interpretar
    """
    path = Path(grid)
    if path.suffix in (".yaml", ".yml"):
        try:
            content = yaml.safe_load(path.read_text(encoding="utf-8"))
        except (OSError, yaml.YAMLError) as e:
            raise InputFormatError(f"No se pudo leer la rejilla YAML: {e}", context={"path": grid}) from e
        if not isinstance(content, dict):
            raise InputFormatError("La rejilla YAML debe ser un mapa clave -> valores", context={"path": grid})
        return _expand(content, allowed)

    axes: Dict[str, List[str]] = {}
    for part in filter(None, (p.strip() for p in grid.split(";"))):
        if "=" not in part:
            raise InputFormatError(f"Segmento de rejilla sin '=': {part!r}")
        key, raw_values = part.split("=", 1)
        axes[key.strip()] = [v.strip() for v in raw_values.split(",") if v.strip()]
    return _expand(axes, allowed)
