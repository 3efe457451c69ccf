"""
Pruebas de las álgebras sl(2), sl(3) y de las matrices con entradas Jet.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.jets import Jet
from src.liealg import (ALGEBRAS, SL2, SL3, LieAlgebraSpec, LieMatrix, SizeMismatchError,
                        bracket, from_coefficients, get_algebra, rational_determinant,
                        rational_inverse, trace_form)
from src.random_instances import monomials_up_to

fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def lie_matrices(draw, spec=SL2, cap=2):
    """Elemento del álgebra con coeficientes Jet aleatorios."""
    coeffs = [Jet(draw(st.dictionaries(st.sampled_from(monomials_up_to(cap)), fractions,
                                       max_size=4)), cap)
              for _ in range(spec.dim)]
    return from_coefficients(spec, coeffs, cap)


@pytest.fixture
def E(sl2_basis):
    return sl2_basis[0]


@pytest.fixture
def F(sl2_basis):
    return sl2_basis[1]


@pytest.fixture
def H(sl2_basis):
    return sl2_basis[2]


def test_sl2_brackets(E, F, H):
    assert bracket(E, F) == H
    assert bracket(H, E) == E.scale(2)
    assert bracket(H, F) == F.scale(-2)
    assert bracket(E, E).is_zero()


@pytest.mark.parametrize("left, right, expected", [
    ('E', 'F_', 1),
    ('H', 'H', 2),
    ('E', 'E', 0),
    ('E', 'H', 0),
])
def test_trace_form(left, right, expected):
    value = trace_form(SL2.basis_element(left, 3), SL2.basis_element(right, 3))
    assert value == Jet.constant(expected, 3)


def test_structure_constants_of_sl2():
    constants = SL2.structure_constants()
    assert constants[(0, 1)] == [0, 0, 1]
    assert constants[(2, 0)] == [2, 0, 0]
    assert constants[(1, 2)] == [0, 2, 0]


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_builtin_algebras_validate(name):
    spec = get_algebra(name)
    assert spec.validate() == {'independent': True, 'closed': True, 'jacobi': True}


def test_dimensions():
    assert SL2.dim == 3
    assert SL3.dim == 8
    assert SL3.matrix_size == 3


def test_unknown_algebra():
    with pytest.raises(KeyError):
        get_algebra('so3')


def test_from_coefficients(E):
    assert from_coefficients(SL2, [1, 0, 0], cap=3) == E
    assert from_coefficients(SL2, [0, 0, 0], cap=3).is_zero()
    x, y = Jet.coordinate('x', 3), Jet.coordinate('y', 3)
    matrix = from_coefficients(SL2, [x, y, Jet.zero(3)])
    assert matrix.entries[0][1] == x
    assert matrix.entries[1][0] == y
    assert matrix.trace().is_zero()


def test_from_coefficients_wrong_length():
    with pytest.raises(SizeMismatchError):
        from_coefficients(SL2, [1, 2])


def test_size_mismatch_between_algebras(E):
    with pytest.raises(SizeMismatchError, match="size mismatch: 2 vs 3"):
        bracket(E, SL3.basis_element('E12', 3))


def test_inverse_near_identity(E):
    x = Jet.coordinate('x', 3)
    g = LieMatrix.identity(2, 3) + E * x
    assert g * g.inverse() == LieMatrix.identity(2, 3)
    assert g.inverse() == LieMatrix.identity(2, 3) - E * x


def test_matrix_entries_share_cap():
    matrix = LieMatrix([[Jet.constant(1, 4), Jet.zero(2)], [Jet.zero(3), Jet.constant(1, 4)]])
    assert matrix.cap == 2
    assert all(e.cap == 2 for row in matrix.entries for e in row)


def test_jacobi_on_jet_valued_matrices(generator):
    X, Y, Z = (generator.random_lie_matrix() for _ in range(3))
    total = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y))
    assert total.is_zero()


def test_rational_scaling(H):
    assert H.scale(Fraction(1, 2)).entries[0][0] == Jet.constant(Fraction(1, 2), 3)


# ============================================================================
# ÁLGEBRA LINEAL RACIONAL
# ============================================================================

def test_rational_inverse_with_row_swap():
    matrix = ((Fraction(0), Fraction(2)), (Fraction(1), Fraction(3)))
    assert rational_inverse(matrix) == ((Fraction(-3, 2), Fraction(1)),
                                        (Fraction(1, 2), Fraction(0)))
    assert rational_determinant(matrix) == -2


def test_rational_inverse_of_singular_matrix():
    with pytest.raises(ArithmeticError, match="singular matrix"):
        rational_inverse(((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4))))


def test_basis_without_closure_fails_validation():
    spec = LieAlgebraSpec('e_f', SL2.basis[:2], ('E', 'F_'), 2)
    assert spec.validate() == {'independent': True, 'closed': False, 'jacobi': True}
    with pytest.raises(ValueError, match="no cierra"):
        spec.structure_constants()


def test_dependent_basis_fails_independence():
    spec = LieAlgebraSpec('e_e', (SL2.basis[0], SL2.basis[0]), ('E', 'E2'), 2)
    assert not spec.validate()['independent']
    assert spec.structure_constants()[(0, 1)] == [0, 0]


def test_structure_constants_of_sl3_cartan():
    constants = SL3.structure_constants()
    e12, h1 = SL3.basis_names.index('E12'), SL3.basis_names.index('H1')
    expected = [0] * SL3.dim
    expected[e12] = 2
    assert constants[(h1, e12)] == expected


# ============================================================================
# PROPIEDADES DE LA FORMA TRAZA
# ============================================================================

@settings(max_examples=40, deadline=None)
@given(lie_matrices(), lie_matrices(), lie_matrices())
def test_trace_form_is_ad_invariant(X, Y, Z):
    assert trace_form(bracket(X, Y), Z) == trace_form(X, bracket(Y, Z))


@settings(max_examples=40, deadline=None)
@given(lie_matrices(), lie_matrices())
def test_trace_of_bracket_vanishes(X, Y):
    assert bracket(X, Y).trace().is_zero()


@settings(max_examples=40, deadline=None)
@given(lie_matrices(), lie_matrices())
def test_trace_form_is_symmetric(X, Y):
    assert trace_form(X, Y) == trace_form(Y, X)


@settings(max_examples=15, deadline=None)
@given(lie_matrices(SL3), lie_matrices(SL3), lie_matrices(SL3))
def test_trace_form_is_ad_invariant_on_sl3(X, Y, Z):
    assert trace_form(bracket(X, Y), Z) == trace_form(X, bracket(Y, Z))
    assert bracket(X, Y).trace().is_zero()
