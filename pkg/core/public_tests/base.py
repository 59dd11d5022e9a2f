"""
Tests públicos - Clases base
ToT-Privacy - Dataset inmutable y contrato PublicTest
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Union

import numpy as np

from .effects import EffectSpec, ScalarEffect
from .exceptions import PublicTestConfigurationError


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    Base de datos x de tamaño n.

    values es una matriz n × d (d = 1 para datos univariados). group_labels,
    si existe, etiqueta cada fila con su grupo (público) para ANOVA.
    """

    values: np.ndarray
    group_labels: Optional[np.ndarray] = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        if values.ndim != 2:
            raise PublicTestConfigurationError(
                "Dataset requiere una matriz n × d",
                context={"ndim": values.ndim}
            )
        object.__setattr__(self, "values", values)

        if self.group_labels is not None:
            labels = np.asarray(self.group_labels)
            if labels.shape != (values.shape[0],):
                raise PublicTestConfigurationError(
                    "Las etiquetas de grupo deben cubrir cada fila",
                    context={"rows": values.shape[0], "labels": labels.shape}
                )
            object.__setattr__(self, "group_labels", labels)

    @classmethod
    def univariate(cls, values: Sequence[float], group_labels: Optional[Sequence[Any]] = None) -> 'Dataset':
        labels = None if group_labels is None else np.asarray(group_labels)
        return cls(np.asarray(values, dtype=float).reshape(-1, 1), labels)

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    @property
    def dim(self) -> int:
        return int(self.values.shape[1])

    @property
    def has_groups(self) -> bool:
        return self.group_labels is not None

    def column(self, index: int = 0) -> np.ndarray:
        return self.values[:, index]

    def groups(self) -> List[Any]:
        """Etiquetas de grupo distintas, ordenadas."""
        if self.group_labels is None:
            return []
        return list(np.unique(self.group_labels))

    def subset(self, indices: Union[Sequence[int], np.ndarray]) -> 'Dataset':
        """Sub-base con las filas indicadas (en ese orden)."""
        idx = np.asarray(indices, dtype=int)
        labels = None if self.group_labels is None else self.group_labels[idx]
        return Dataset(self.values[idx], labels)

    def with_row(self, index: int, row: Sequence[float]) -> 'Dataset':
        """Copia con la fila `index` reemplazada (base de datos vecina)."""
        values = self.values.copy()
        values[index] = np.asarray(row, dtype=float)
        return Dataset(values, self.group_labels)


class PublicTest(ABC):
    """
    Contrato de un test público τ.

    Las subclases implementan `_p_value` (sobre una sub-base con datos
    suficientes) y `_power` (potencia analítica para n >= min_sample_size y
    efecto no nulo). `p_value` devuelve None cuando τ no puede ejecutarse.
    """

    name: str = "public"

    @abstractmethod
    def min_sample_size(self) -> int:
        pass

    @abstractmethod
    def _p_value(self, subset: Dataset) -> Optional[float]:
        pass

    @abstractmethod
    def _power(self, n: int, effect: EffectSpec, alpha0: float) -> float:
        pass

    def coerce_effect(self, effect: Union[EffectSpec, float]) -> EffectSpec:
        """Acepta un escalar como ScalarEffect; las subclases restringen el tipo."""
        if isinstance(effect, EffectSpec):
            return effect
        return ScalarEffect(float(effect))

    def p_value(self, subset: Dataset) -> Optional[float]:
        """
        p-valor de τ sobre la sub-base, en [0,1], o None si los datos no
        alcanzan para ejecutar el test.
        """
        if subset.n < self.min_sample_size():
            return None
        p = self._p_value(subset)
        if p is None or np.isnan(p):
            return None
        return float(min(max(p, 0.0), 1.0))

    def power(self, n: int, effect: Union[EffectSpec, float], alpha0: float) -> float:
        """
        Potencia analítica de τ con n observaciones y nivel α₀.

        Sin datos suficientes τ no corre y el p-valor es uniforme, por lo
        que la potencia es α₀; con efecto nulo también es α₀.
        """
        if not 0.0 < alpha0 < 1.0:
            raise PublicTestConfigurationError(
                f"α₀ debe estar en (0,1), recibido {alpha0}", context={"alpha0": alpha0}
            )
        effect = self.coerce_effect(effect)
        if n < self.min_sample_size() or effect.magnitude == 0:
            return float(alpha0)
        return float(min(max(self._power(int(n), effect, alpha0), 0.0), 1.0))

    def describe(self) -> dict:
        return {"test": self.name, "min_sample_size": self.min_sample_size()}
