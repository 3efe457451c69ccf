"""
Pruebas del generador de instancias aleatorias con semilla.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

from fractions import Fraction

from src.liealg import SL2, SL3
from src.random_instances import InstanceGenerator, make_rng, monomials_up_to, stream_id


def test_monomials_up_to():
    assert len(monomials_up_to(0)) == 1
    assert len(monomials_up_to(2)) == 10
    assert all(sum(m) <= 3 for m in monomials_up_to(3))


def test_stream_id_is_stable():
    assert stream_id('average_bf') == stream_id('average_bf')
    assert stream_id('average_bf') != stream_id('interpolated_equations')


def test_same_seed_same_instances():
    first = InstanceGenerator.for_trial(SL2, 3, 7, 'cs_splitting', 0).random_connection()
    second = InstanceGenerator.for_trial(SL2, 3, 7, 'cs_splitting', 0).random_connection()
    assert first == second


def test_trials_use_independent_streams():
    first = InstanceGenerator.for_trial(SL2, 3, 7, 'cs_splitting', 0).random_jet()
    second = InstanceGenerator.for_trial(SL2, 3, 7, 'cs_splitting', 1).random_jet()
    assert first.terms != second.terms


def test_fractions_follow_policy():
    gen = InstanceGenerator(SL2, 2, make_rng(1), numerators=(1, 2), denominators=(3,))
    for _ in range(20):
        value = gen.random_fraction()
        assert value in {Fraction(1, 3), Fraction(2, 3)}


def test_zero_constant_jets():
    gen = InstanceGenerator(SL2, 3, make_rng(5), density=1.0)
    assert gen.random_jet(zero_constant=True).constant_term == 0


def test_group_jets_are_near_identity():
    gen = InstanceGenerator(SL3, 2, make_rng(3))
    g = gen.random_group_jet()
    constant = [[e.constant_term for e in row] for row in g.matrix.entries]
    assert constant == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert g.matrix * g.inverse == type(g.matrix).identity(3, 2)


def test_random_lie_matrices_are_traceless(generator):
    for _ in range(5):
        assert generator.random_lie_matrix().trace().is_zero()


def test_forms_have_requested_degree(generator):
    for degree in range(4):
        form = generator.random_form(degree)
        assert form.degree == degree
        assert form.valid_order == 3
