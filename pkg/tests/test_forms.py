"""
Pruebas de las formas graduadas: producto exterior, corchete, d, traza y contracción.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.forms import (DegenerateOrderError, DegreeError, GForm, ScalarForm, VectorFieldSym,
                       contract, covector_key, covector_name, exterior_d, gbracket, scale_add,
                       trace, wedge)
from src.jets import Jet
from src.liealg import SL2, LieMatrix
from src.random_instances import InstanceGenerator, make_rng

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_covector_names_round_trip():
    assert covector_key('dx^dz') == (0, 2)
    assert covector_name((0, 1, 2)) == 'dx^dy^dz'
    assert covector_name(()) == '1'


def test_alpha_wedge_alpha(alpha, sl2_basis):
    E, F, H = sl2_basis
    expected = GForm.from_named({'dx^dy': H, 'dx^dz': E.scale(-2), 'dy^dz': F.scale(2)},
                                valid_order=3)
    assert wedge(alpha, alpha) == expected


def test_wedge_above_top_degree_is_zero(alpha):
    two = wedge(alpha, alpha)
    assert wedge(two, two).degree == 4
    assert wedge(two, two).is_zero()


def test_graded_bracket_with_degree_zero(sl2_basis):
    E, _, H = sl2_basis
    edx = GForm.from_named({'dx': E}, valid_order=3)
    result = gbracket(edx, GForm.from_matrix(H))
    assert result == GForm.from_named({'dx': E.scale(-2)}, valid_order=3)


def test_graded_bracket_of_one_forms_is_twice_wedge(alpha):
    assert gbracket(alpha, alpha) == wedge(alpha, alpha).scale(2)


def test_exterior_d_lowers_valid_order(sl2_basis):
    E = sl2_basis[0]
    x = Jet.coordinate('x', 3)
    form = GForm.from_named({'dy': E * x}, valid_order=3)
    d = exterior_d(form)
    assert d.degree == 2
    assert d.valid_order == 2
    assert d == GForm.from_named({'dx^dy': E}, valid_order=2)


def test_exterior_d_squared_vanishes(generator):
    form = generator.random_form(0)
    assert exterior_d(exterior_d(form)).is_zero()


def test_exterior_d_at_order_zero_is_degenerate(sl2_basis):
    form = GForm.from_named({'dx': sl2_basis[0]}, valid_order=0)
    with pytest.raises(DegenerateOrderError):
        exterior_d(form)


def test_trace_examples(sl2_basis):
    _, _, H = sl2_basis
    assert trace(GForm.from_named({'dx': H}, valid_order=3)).is_zero()
    identity = LieMatrix.identity(2, 3)
    assert trace(GForm.from_named({'dz': identity}, valid_order=3)) == \
        ScalarForm.from_named({'dz': 2}, cap=3)


def test_trace_of_alpha_cubed(alpha):
    cube = trace(wedge(wedge(alpha, alpha), alpha))
    assert cube == ScalarForm.from_named({'dx^dy^dz': 6}, cap=3)


def test_scalar_form_str():
    form = ScalarForm.from_named({'dx': 0, 'dz': 2}, cap=3)
    assert str(form) == '2 dz'
    assert str(ScalarForm.zero(2, 3)) == '0'


@pytest.mark.parametrize("axis, expected", [
    ('x', {'dy': 1}),
    ('y', {'dx': -1}),
])
def test_contraction_first_slot_positive(axis, expected):
    two_form = ScalarForm.from_named({'dx^dy': 1}, cap=3)
    xi = VectorFieldSym.coordinate_field(axis, 3)
    assert contract(xi, two_form) == ScalarForm.from_named(expected, cap=3)


def test_contraction_of_degree_zero_raises(sl2_basis):
    xi = VectorFieldSym.coordinate_field('z', 3)
    with pytest.raises(DegreeError):
        contract(xi, GForm.from_matrix(sl2_basis[2]))


def test_contraction_is_antiderivation(generator):
    xi = generator.random_vector_field()
    A, B = generator.random_form(1), generator.random_form(1)
    lhs = contract(xi, wedge(A, B))
    rhs = wedge(contract(xi, A), B) - wedge(A, contract(xi, B))
    assert lhs == rhs


def test_scale_add(alpha):
    assert scale_add(2, alpha, -1, alpha) == alpha


def test_scale_add_degree_mismatch(alpha):
    with pytest.raises(DegreeError, match="degree mismatch: 1 vs 2"):
        scale_add(1, alpha, 1, wedge(alpha, alpha))


def test_adding_forms_of_different_degree_raises(alpha):
    with pytest.raises(DegreeError):
        alpha + wedge(alpha, alpha)


def test_valid_order_is_minimum(sl2_basis):
    E = sl2_basis[0]
    low = GForm.from_named({'dx': E}, valid_order=1)
    high = GForm.from_named({'dx': E}, valid_order=3)
    assert (low + high).valid_order == 1
    assert wedge(low, high).valid_order == 1


def test_scalar_times_matrix_form_is_matrix_form():
    dx = ScalarForm.from_named({'dx': 1}, cap=3)
    h = GForm.from_matrix(SL2.basis_element('H', 3))
    product = wedge(dx, h)
    assert isinstance(product, GForm)
    assert product.component('dx') == SL2.basis_element('H', 3)


# ============================================================================
# PROPIEDADES GRADUADAS
# ============================================================================

@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
def test_graded_bracket_antisymmetry(seed, p, q):
    generator = InstanceGenerator(SL2, 2, make_rng(seed))
    A, B = generator.random_form(p), generator.random_form(q)
    assert gbracket(A, B) == gbracket(B, A).scale(-(-1) ** (p * q))


@settings(max_examples=25, deadline=None)
@given(seeds, st.sampled_from([(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0)]))
def test_exterior_d_graded_leibniz(seed, degrees):
    p, q = degrees
    generator = InstanceGenerator(SL2, 2, make_rng(seed))
    A, B = generator.random_form(p), generator.random_form(q)
    lhs = exterior_d(wedge(A, B))
    rhs = wedge(exterior_d(A), B) + wedge(A, exterior_d(B)).scale((-1) ** p)
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(seeds, st.sampled_from([(0, 1), (1, 1), (1, 2), (0, 2)]))
def test_exterior_d_graded_leibniz_of_bracket(seed, degrees):
    p, q = degrees
    generator = InstanceGenerator(SL2, 2, make_rng(seed))
    A, B = generator.random_form(p), generator.random_form(q)
    lhs = exterior_d(gbracket(A, B))
    rhs = gbracket(exterior_d(A), B) + gbracket(A, exterior_d(B)).scale((-1) ** p)
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
def test_trace_of_graded_bracket_vanishes(seed, p, q):
    generator = InstanceGenerator(SL2, 2, make_rng(seed))
    assert trace(gbracket(generator.random_form(p), generator.random_form(q))).is_zero()


@pytest.mark.parametrize("degree", [0, 1, 2, 3])
def test_exterior_d_squared_vanishes_in_every_degree(degree):
    form = InstanceGenerator(SL2, 3, make_rng(5, 0, degree)).random_form(degree)
    assert exterior_d(exterior_d(form)).is_zero()
