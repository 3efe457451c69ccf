"""
Pruebas de conexiones, curvatura y transformaciones de gauge.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import pytest

from src.forms import GForm, wedge
from src.gauge import (Connection, ConnectionDegreeError, GroupJet, covariant_d, curvature,
                       flat_connection, gauge_transform, gauge_transform_tensorial)
from src.jets import Jet
from src.liealg import LieMatrix


def test_connection_requires_degree_one(sl2_basis):
    with pytest.raises(ConnectionDegreeError):
        Connection(GForm.from_matrix(sl2_basis[0]))


def test_difference_of_connections_is_a_form(alpha, zero_connection):
    w1 = Connection(alpha)
    difference = w1 - zero_connection
    assert isinstance(difference, GForm)
    assert difference == alpha


def test_curvature_of_constant_connection(alpha):
    assert curvature(Connection(alpha)) == wedge(alpha, alpha)


def test_curvature_of_zero_connection(zero_connection):
    assert curvature(zero_connection).is_zero()


def test_flat_connection_of_simple_group_element(sl2_basis):
    E = sl2_basis[0]
    g = GroupJet(LieMatrix.identity(2, 3) + E * Jet.coordinate('x', 3))
    w = flat_connection(g)
    assert w.form == GForm.from_named({'dx': E}, valid_order=2)
    assert w.valid_order == 2
    assert curvature(w).is_zero()


def test_singular_group_element_is_rejected(sl2_basis):
    with pytest.raises(ArithmeticError):
        GroupJet(sl2_basis[0])


def test_group_element_with_permuted_constant_part(sl2_basis):
    x = Jet.coordinate('x', 3)
    swap = LieMatrix.from_rational([[0, 1], [1, 0]], 3)
    g = GroupJet(swap + sl2_basis[2] * x)
    assert g.matrix * g.inverse == LieMatrix.identity(2, 3)
    assert g.inverse * g.matrix == LieMatrix.identity(2, 3)
    assert flat_connection(g).valid_order == 2


def test_identity_gauge_transform(generator):
    w = generator.random_connection()
    g = GroupJet.identity(2, 3)
    assert gauge_transform(g, w) == w


def test_pure_gauge_connections_are_flat(generator):
    w = flat_connection(generator.random_group_jet())
    assert curvature(w).is_zero()


def test_curvature_is_gauge_covariant(generator):
    w = generator.random_connection()
    g = generator.random_group_jet()
    transformed = curvature(gauge_transform(g, w))
    assert transformed == gauge_transform_tensorial(g, curvature(w))


def test_bianchi_identity(generator):
    w = generator.random_connection()
    assert covariant_d(w, curvature(w)).is_zero()


def test_difference_transforms_tensorially(generator):
    w0, w1 = generator.random_connection(), generator.random_connection()
    g = generator.random_group_jet()
    lhs = gauge_transform(g, w1) - gauge_transform(g, w0)
    assert lhs == gauge_transform_tensorial(g, w1 - w0)


def test_shifted_connection(alpha, zero_connection):
    half = zero_connection.shifted(alpha, 2)
    assert half.form == alpha.scale(2)
