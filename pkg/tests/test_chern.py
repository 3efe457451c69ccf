"""
Pruebas de la transgresión, el cambio de variables, las ecuaciones de
movimiento y los superpotenciales.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

from fractions import Fraction

import pytest

from src.chern import (EOMResiduals, ParameterRangeError, VariableChoice, affine_identity,
                       average_connection, change_variables, chern_simons, curvature_interpolation,
                       eom_residuals, two_connection_chain, identity7_check, inverse_change,
                       presentation_residuals, q_general, splitting_check, superpotential_diffeo,
                       superpotential_gauge, transgression, transgression_alt,
                       transgression_average)
from src.forms import DegenerateOrderError, ScalarForm
from src.gauge import Connection
from src.liealg import SL2

T_VALUES = [Fraction(0), Fraction(1, 5), Fraction(1, 2), Fraction(4, 5), Fraction(1)]


@pytest.fixture
def pair(generator):
    return generator.random_connection(), generator.random_connection()


# ============================================================================
# EJEMPLO TRABAJADO EN sl(2)
# ============================================================================

def test_worked_transgression(alpha, zero_connection):
    q = transgression(Connection(alpha), zero_connection)
    assert q == ScalarForm.from_named({'dx^dy^dz': 4}, cap=3)
    assert str(q) == '4 dx^dy^dz'


def test_worked_presentations_agree(alpha, zero_connection):
    w1 = Connection(alpha)
    q = transgression(w1, zero_connection)
    assert transgression_alt(w1, zero_connection) == q
    assert transgression_average(w1, zero_connection) == q


def test_worked_chern_simons(alpha):
    # CS(alpha) = tr(alpha^3 - 1/3 alpha^3) para alpha constante
    assert chern_simons(Connection(alpha)) == ScalarForm.from_named({'dx^dy^dz': 4}, cap=3)


def test_worked_superpotential(alpha):
    u = superpotential_gauge(alpha, SL2.basis_element('H', 3))
    assert str(u) == '2 dz'


# ============================================================================
# IDENTIDADES SOBRE INSTANCIAS ALEATORIAS
# ============================================================================

def test_dual_presentation(pair):
    w0, w1 = pair
    assert transgression(w1, w0) == transgression_alt(w1, w0)


def test_antisymmetry(pair):
    w0, w1 = pair
    assert transgression(w1, w0) == -transgression(w0, w1)


def test_splitting(pair):
    w0, w1 = pair
    assert splitting_check(w1, w0) == transgression(w1, w0)


def test_splitting_needs_order_two():
    low = Connection.zero(2, 1)
    with pytest.raises(DegenerateOrderError):
        splitting_check(low, low)


def test_average_presentation(pair):
    w0, w1 = pair
    assert transgression_average(w1, w0) == transgression(w1, w0)


def test_two_connection_chain_members_agree(pair):
    first, *rest = two_connection_chain(*pair)
    for other in rest:
        assert other == first


@pytest.mark.parametrize("t", T_VALUES)
def test_identity7_for_all_t(pair, t):
    first, second, third = identity7_check(*pair, t)
    assert first == second
    assert first == third


@pytest.mark.parametrize("t", T_VALUES)
def test_general_lagrangian(pair, t):
    w0, w1 = pair
    w_t, a = change_variables(w0, w1, t)
    assert q_general(w_t, a, t) == transgression(w1, w0)


@pytest.mark.parametrize("t", T_VALUES)
def test_change_of_variables_round_trip(pair, t):
    w0, w1 = pair
    w_t, a = change_variables(w0, w1, t)
    back0, back1 = inverse_change(w_t, a, t)
    assert back0 == w0
    assert back1 == w1
    lhs, rhs = affine_identity(w0, w1, t)
    assert lhs == rhs
    direct, affine = curvature_interpolation(w0, w1, t)
    assert direct == affine


def test_average_connection_is_half_choice(pair):
    w0, w1 = pair
    w_half, _ = change_variables(w0, w1, Fraction(1, 2))
    assert average_connection(w0, w1) == w_half


# ============================================================================
# ECUACIONES DE MOVIMIENTO
# ============================================================================

@pytest.mark.parametrize("t", T_VALUES)
def test_eom_vanish_on_pure_gauge_pairs(generator, t):
    w0, w1, _, _ = generator.pure_gauge_pair()
    w_t, a = change_variables(w0, w1, t)
    residuals = eom_residuals(w_t, a, t)
    assert isinstance(residuals, EOMResiduals)
    assert residuals.vanish()


def test_eom_do_not_vanish_off_shell(pair):
    w0, w1 = pair
    w_t, a = change_variables(w0, w1, Fraction(1, 2))
    assert not eom_residuals(w_t, a, Fraction(1, 2)).vanish()


def test_presentation_residuals_on_shell(generator):
    w0, w1, _, _ = generator.pure_gauge_pair()
    residuals = presentation_residuals(w0, w1)
    assert set(residuals) == {'two_connections', 'connection_tensorial', 'bf'}
    for forms in residuals.values():
        assert all(form.is_zero() for form in forms)


# ============================================================================
# SUPERPOTENCIALES Y ELECCIÓN DE VARIABLES
# ============================================================================

def test_gauge_superpotential_is_presentation_independent(pair, generator):
    w0, w1 = pair
    chi = generator.random_lie_matrix()
    base = superpotential_gauge(w1 - w0, chi)
    for t in T_VALUES:
        _, a = change_variables(w0, w1, t)
        assert superpotential_gauge(a, chi) == base


def test_diffeo_superpotential_is_t_independent(pair, generator):
    w0, w1 = pair
    xi = generator.random_vector_field()
    values = []
    for t in (Fraction(0), Fraction(1, 2), Fraction(1)):
        w_t, a = change_variables(w0, w1, t)
        values.append(superpotential_diffeo(a, w_t, t, xi))
    assert values[0] == values[1] == values[2]


@pytest.mark.parametrize("t, label", [
    (Fraction(1, 2), 'bf_average'),
    (Fraction(0), 'flat_omega0_alpha'),
    (Fraction(1), 'flat_omega1_alpha'),
    (Fraction(1, 5), 'interpolated'),
])
def test_variable_choice_labels(t, label):
    assert VariableChoice(t).label == label


@pytest.mark.parametrize("bad", [0.5, Fraction(-1, 5), Fraction(3, 2)])
def test_variable_choice_rejects_bad_t(bad):
    with pytest.raises(ParameterRangeError):
        VariableChoice(bad)
