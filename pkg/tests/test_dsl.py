"""
Pruebas del lenguaje de expresiones: parser, tipos, errores e impresión.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src import dsl
from src.dsl import (Add, Bracket, Curv, DegreeMismatchError, Deriv, DSLSyntaxError, Neg,
                     Rational, Scale, Sub, Symbol, Trace, UnknownSymbolError, Wedge, parse,
                     pretty_print)


# ============================================================================
# ESTRUCTURA
# ============================================================================

def test_trace_of_wedge_structure():
    node = parse("tr(d(w0) ^ w1)")
    assert node == Trace(Wedge(Deriv(Symbol('w0')), Symbol('w1')))


def test_scaling_binds_tighter_than_wedge():
    node = parse("2*F(w0) ^ a")
    assert node == Wedge(Scale(Rational(Fraction(2)), Curv(Symbol('w0'))), Symbol('a'))


def test_negation_wraps_wedge():
    node = parse("-1/4*a ^ a")
    assert node == Neg(Wedge(Scale(Rational(Fraction(1, 4)), Symbol('a')), Symbol('a')))


def test_addition_is_left_associative():
    node = parse("a - w0 + w1")
    assert node == Add(Sub(Symbol('a'), Symbol('w0')), Symbol('w1'))


def test_positions_are_recorded():
    node = parse("w0 +\n  w1", origin=(3, 5))
    assert node.pos == (3, 8)
    assert node.right.pos == (4, 3)


def test_inferred_types():
    symbols = dsl.default_symbols()
    assert dsl.infer_type(parse("tr(a ^ a ^ a)"), symbols) == dsl.NodeType('scalar', 3)
    assert dsl.infer_type(parse("D(w0; chi)"), symbols) == dsl.NodeType('matrix', 1)
    assert dsl.infer_type(parse("ic(xi; a)"), symbols) == dsl.NodeType('matrix', 0)


# ============================================================================
# ERRORES
# ============================================================================

def test_unbalanced_parenthesis():
    with pytest.raises(DSLSyntaxError, match=r"unbalanced parenthesis at 1:9"):
        parse("tr(w0 ^")


def test_unbalanced_parenthesis_on_later_line():
    with pytest.raises(DSLSyntaxError, match=r"unbalanced parenthesis at 2:1"):
        parse("tr(a ^ a\n")


def test_unbalanced_bracket_reports_closer_position():
    with pytest.raises(DSLSyntaxError, match=r"unbalanced bracket at 1:9"):
        parse("tr(a ^ a])")


def test_unknown_symbol():
    with pytest.raises(UnknownSymbolError, match=r"unknown symbol 'beta' at 1:5"):
        parse("a ^ beta")


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError, match=r"degree mismatch: 1 vs 2"):
        parse("a + a ^ a")


def test_expected_tokens_are_listed():
    with pytest.raises(DSLSyntaxError) as info:
        parse("a ^ ")
    assert "expected one of" in str(info.value)
    assert info.value.expected


def test_power_only_on_functions():
    with pytest.raises(DegreeMismatchError):
        parse("a**2")
    parse("x**2*dx")


def test_vector_only_inside_contraction():
    with pytest.raises(DegreeMismatchError):
        parse("xi + chi")


def test_zero_denominator():
    with pytest.raises(DSLSyntaxError):
        parse("1/0*a")


# ============================================================================
# IMPRESIÓN CANÓNICA
# ============================================================================

@pytest.mark.parametrize("text", [
    "tr(2*F(w0) ^ a + D(w0; a) ^ a + 2/3*a ^ a ^ a)",
    "-1/4*a ^ a",
    "[w0, a] - d(a)",
    "(2*t - 1)*D(wt; a)",
    "x**2*dx ^ dy",
])
def test_pretty_print_is_canonical(text):
    assert pretty_print(parse(text)) == text


def test_pretty_print_adds_needed_parentheses():
    node = Wedge(Symbol('a'), Wedge(Symbol('a'), Symbol('w0')))
    assert pretty_print(node) == "a ^ (a ^ w0)"
    assert parse(pretty_print(node)) == node


MATRIX_LEAVES = {
    0: st.sampled_from(['chi', 'E', 'H', 'I']).map(Symbol),
    1: st.sampled_from(['w0', 'w1', 'wt', 'a']).map(Symbol),
    2: st.just(Curv(Symbol('w0'))),
}

rationals = st.fractions(min_value=0, max_value=5, max_denominator=4).map(Rational)


def matrix_forms(degree, depth=2):
    """ASTs bien tipados de formas matriciales del grado dado."""
    if depth == 0:
        return MATRIX_LEAVES[degree]

    def sub(d):
        return matrix_forms(d, depth - 1)

    options = [
        MATRIX_LEAVES[degree],
        st.builds(Add, sub(degree), sub(degree)),
        st.builds(Sub, sub(degree), sub(degree)),
        st.builds(Neg, sub(degree)),
        st.builds(Scale, rationals, sub(degree)),
    ]
    if degree >= 1:
        options += [
            st.builds(Wedge, sub(1), sub(degree - 1)),
            st.builds(Bracket, sub(degree - 1), sub(1)),
            st.builds(Deriv, sub(degree - 1)),
        ]
    return st.one_of(options)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([0, 1, 2]).flatmap(matrix_forms))
def test_pretty_print_round_trip(node):
    assert parse(pretty_print(node)) == node


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([1, 2]).flatmap(matrix_forms))
def test_pretty_print_round_trip_under_trace(node):
    traced = Trace(node)
    assert parse(pretty_print(traced)) == traced
