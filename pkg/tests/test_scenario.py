"""
Pruebas de la carga y ejecución de escenarios.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

from fractions import Fraction

import pytest

import oraculo_sl2
from config import config
from src.dsl import DSLError
from src.gauge import Connection, GroupJet
from src.scenario import BUILTINS, ScenarioError, ScenarioLoader, ScenarioRunner, run_scenario

HEADER = "algebra: sl2\ncap: 3\n---\n"
PAIR = "connection w0 = zero\nconnection w1 = E*dx + F_*dy + H*dz\n"


def _run(text):
    scenario = ScenarioLoader().loads(text)
    return ScenarioRunner(timing=False).run(scenario)


def _by_id(report):
    return {c.id: c for c in report.checks}


# ============================================================================
# ESCENARIOS INCLUIDOS
# ============================================================================

def test_worked_example_matches_oracle():
    report = run_scenario(config.SCENARIOS_DIR / 'worked_sl2.scn', timing=False)
    expected = oraculo_sl2.compute_worked_values()
    checks = _by_id(report)
    assert checks['Q'].value == expected['Q'] == '4 dx^dy^dz'
    assert checks['U_H'].value == expected['U_H'] == '2 dz'
    assert report.passed, [(c.id, c.certificate) for c in report.checks if not c.passed]


def test_bf_bullet_scenario_passes():
    report = run_scenario(config.SCENARIOS_DIR / 'bf_bullet.scn', timing=False)
    assert report.kind == 'scenario'
    assert report.cap == 4
    assert report.passed, [(c.id, c.certificate) for c in report.checks if not c.passed]
    assert all(c.wall_time is None for c in report.checks)


def test_oracle_constants():
    alpha = (oraculo_sl2.SL2_E, oraculo_sl2.SL2_F, oraculo_sl2.SL2_H)
    assert oraculo_sl2.transgression_constant(alpha) == 4
    assert oraculo_sl2.superpotential_constant(alpha, oraculo_sl2.SL2_H) == {
        'dx': 0, 'dy': 0, 'dz': 2}


# ============================================================================
# CARGA
# ============================================================================

def test_loader_builds_declarations():
    scenario = ScenarioLoader().loads(
        "algebra: sl2\ncap: 4\nt: 0, 1/2\n---\n"
        "group g = I + x*E\n"
        "connection w0 = flat g\n"
        "connection w1 = gauge g w0\n"
        "vector xi = 1, x, 0\n")
    assert scenario.cap == 4
    assert scenario.t_values == (Fraction(0), Fraction(1, 2))
    assert isinstance(scenario.bindings['g'], GroupJet)
    assert isinstance(scenario.bindings['w1'], Connection)
    assert scenario.bindings['xi'].components[1].terms == {(1, 0, 0): 1}


def test_default_cap_applies_without_header_value():
    scenario = ScenarioLoader(default_cap=5).loads("algebra: sl3\n---\n")
    assert scenario.cap == 5
    assert scenario.spec.matrix_size == 3


def test_error_position_in_continuation_line():
    text = (HEADER + PAIR
            + "\n"
            + "# comentario\n"
            + "matrix chi = H\n"
            + "check ok: tr(a ^ chi) == 2*dz\n"
            + "\n"
            + "check bad: tr(a ^ a ^ a) ==\n"
            + "    beta\n")
    with pytest.raises(DSLError, match=r"unknown symbol 'beta' at 12:5"):
        ScenarioLoader().loads(text)


def test_missing_separator():
    with pytest.raises(ScenarioError, match="missing '---' separator"):
        ScenarioLoader().loads("algebra: sl2\ncap: 3\n")


@pytest.mark.parametrize("header, message", [
    ("t: 3/2\n", r"t values must lie in \[0, 1\] at 1:1"),
    ("t: 1/x\n", "invalid rational"),
    ("cap: tres\n", "invalid cap"),
    ("colour: red\n", "invalid header line"),
    ("algebra: so3\n", "unknown algebra"),
])
def test_invalid_headers(header, message):
    with pytest.raises(ScenarioError, match=message):
        ScenarioLoader().loads(header + "---\n")


def test_unknown_builtin():
    with pytest.raises(ScenarioError, match="unknown builtin 'eq42' at 6:1"):
        ScenarioLoader().loads(HEADER + PAIR + "check c: builtin eq42\n")


def test_redeclaration_is_rejected():
    with pytest.raises(ScenarioError, match="already defined"):
        ScenarioLoader().loads(HEADER + PAIR + "connection w0 = zero\n")


def test_connection_must_have_degree_one():
    with pytest.raises(ScenarioError, match="must be a matrix of degree 1"):
        ScenarioLoader().loads(HEADER + "connection w0 = E\n")


def test_unrecognized_statement():
    with pytest.raises(ScenarioError, match="unrecognized statement"):
        ScenarioLoader().loads(HEADER + "assert w0 == 0\n")


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        run_scenario(tmp_path / 'missing.scn')


# ============================================================================
# EJECUCIÓN
# ============================================================================

def test_failing_check_has_certificate():
    report = _run(HEADER + PAIR + "check wrong: tr(a ^ a ^ a) == 0\n")
    [check] = report.checks
    assert not check.passed
    assert check.certificate == '6 dx^dy^dz'
    assert check.valid_order == 3


def test_symbolic_check_in_scenario():
    report = _run(HEADER + PAIR
                  + "check symbolic dual: tr(2*F(w0) ^ a + D(w0; a) ^ a + 2/3*a ^ a ^ a)"
                  + " == tr(2*F(w1) ^ a - D(w1; a) ^ a + 2/3*a ^ a ^ a)\n")
    [check] = report.checks
    assert check.backend == 'symbolic'
    assert check.passed


def test_builtin_without_declarations_fails():
    report = _run(HEADER + "check q: builtin transgression_alt\n")
    [check] = report.checks
    assert not check.passed
    assert 'builtin needs declarations: w0, w1' in check.certificate


def test_report_expression_value():
    report = _run(HEADER + PAIR + "report cube: tr(a ^ a ^ a)\n")
    assert report.checks[0].value == '6 dx^dy^dz'


@pytest.mark.parametrize("builtin", sorted(set(BUILTINS) - {'superpotential_gauge',
                                                            'superpotential_diffeo'}))
def test_builtins_on_random_like_pair(builtin):
    text = ("algebra: sl2\ncap: 3\nt: 0, 1/5, 1\n---\n"
            "connection w0 = x*E*dy + z*H*dx\n"
            "connection w1 = E*dx + y*F_*dz - x*y*H*dy\n"
            f"check b: builtin {builtin}\n")
    report = _run(text)
    check = report.checks[0]
    if builtin in ('eom_residuals', 'presentation_residuals'):
        assert not check.passed
    else:
        assert check.passed, check.certificate


def test_superpotential_builtins():
    text = (HEADER + PAIR
            + "matrix chi = x*H + E\n"
            + "vector xi = 1, z, x*y\n"
            + "check ug: builtin superpotential_gauge\n"
            + "check ud: builtin superpotential_diffeo\n")
    report = _run(text)
    assert report.passed, [(c.id, c.certificate) for c in report.checks if not c.passed]
