"""
Registro de familias de tests públicos
ToT-Privacy - Construcción por nombre para la CLI y el arnés
"""

from typing import Any, Callable, Dict, List

from .anova import AnovaTest
from .base import PublicTest
from .exceptions import UnknownTestFamilyError
from .mvn_mean import MvnMeanTest
from .ttest import TTest
from .ztest import ZTest

TEST_FAMILIES: Dict[str, Callable[..., PublicTest]] = {
    "z": ZTest,
    "t": TTest,
    "anova": AnovaTest,
    "mvn-mean": MvnMeanTest,
}


def available_families() -> List[str]:
    return list(TEST_FAMILIES)


def create_test(family: str, **kwargs: Any) -> PublicTest:
    """
    Crea un test público por nombre.

    Args:
        family: 'z', 't', 'anova' o 'mvn-mean'
        **kwargs: groups (anova) o dim (mvn-mean)

    Raises:
        UnknownTestFamilyError: si la familia no está registrada
    """
    try:
        factory = TEST_FAMILIES[family]
    except KeyError:
        raise UnknownTestFamilyError(family, available_families()) from None

    if family == "anova":
        return factory(groups=kwargs.get("groups"))
    if family == "mvn-mean":
        return factory(dim=kwargs.get("dim"))
    return factory()
