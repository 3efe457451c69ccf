"""
Fixtures compartidas de las pruebas.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import pytest

from src.forms import GForm
from src.gauge import Connection
from src.liealg import SL2
from src.random_instances import InstanceGenerator, make_rng

CAP = 3


@pytest.fixture
def cap():
    return CAP


@pytest.fixture
def sl2_basis():
    """E, F_, H como LieMatrix constantes con cap 3."""
    return tuple(SL2.basis_element(name, CAP) for name in SL2.basis_names)


@pytest.fixture
def alpha(sl2_basis):
    """alpha = E dx + F dy + H dz del ejemplo trabajado."""
    E, F, H = sl2_basis
    return GForm.from_named({'dx': E, 'dy': F, 'dz': H}, valid_order=CAP)


@pytest.fixture
def zero_connection():
    return Connection.zero(SL2.matrix_size, CAP)


@pytest.fixture
def generator():
    """Generador determinista de instancias en sl(2)."""
    return InstanceGenerator(SL2, CAP, make_rng(11, 0, 0))
