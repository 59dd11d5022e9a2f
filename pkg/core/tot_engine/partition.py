"""
Particionado aleatorio en m subconjuntos disjuntos
ToT-Privacy - Reparto por turnos sobre una permutación sembrada

Las filas se barajan (dentro de cada grupo si hay etiquetas públicas) y se
reparten por turnos: la fila k-ésima del orden va al subconjunto k mod m.
Así los primeros n mod m subconjuntos tienen ⌈n/m⌉ filas, el resto ⌊n/m⌋,
y con grupos cada subconjunto recibe proporciones lo más parecidas posible
a las del total.
"""

from typing import List, Optional

import numpy as np

from ..public_tests import Dataset
from .exceptions import PartitionError


def partition_indices(
    n: int,
    m: int,
    rng: np.random.Generator,
    group_labels: Optional[np.ndarray] = None
) -> List[np.ndarray]:
    """
    Índices de fila de cada subconjunto.

    Raises:
        PartitionError: si m < 1 o m > n
    """
    if m < 1 or m > n:
        raise PartitionError(
            f"m debe cumplir 1 <= m <= n, recibido m={m}, n={n}",
            context={"m": m, "n": n}
        )

    if group_labels is None:
        order = rng.permutation(n)
    else:
        labels = np.asarray(group_labels)
        order = np.concatenate([
            rng.permutation(np.flatnonzero(labels == label))
            for label in np.unique(labels)
        ])

    return [order[j::m] for j in range(m)]


def partition(data: Dataset, m: int, rng: np.random.Generator) -> List[Dataset]:
    """
    Divide la base en m sub-bases disjuntas cuya unión es la base completa.

    La asignación solo depende de rng y de las etiquetas de grupo, nunca de
    los valores.
    """
    return [data.subset(indices) for indices in partition_indices(data.n, m, rng, data.group_labels)]
