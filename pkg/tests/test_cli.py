"""
Pruebas de la línea de comandos (main.py).

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import json

import pytest

import main
from config import config

FAILING_SCENARIO = """algebra: sl2
cap: 3
---
connection w0 = zero
connection w1 = E*dx + F_*dy + H*dz
check wrong: tr(a ^ a ^ a) == 0
"""


@pytest.fixture(autouse=True)
def log_to_tmp(tmp_path, monkeypatch):
    monkeypatch.setattr(config, 'LOG_FILE', tmp_path / 'verificacion.log')


def test_verify_symbolic_json(capsys):
    code = main.main(['verify', '--suite', 'symbolic', '--format', 'json', '--no-timing'])
    out = capsys.readouterr().out
    assert code == config.EXIT_PASS
    data = json.loads(out)
    assert data['schema'] == config.REPORT_SCHEMA
    assert data['verdict'] == 'PASS'
    assert data['n_checks'] == 8


def test_verify_output_is_reproducible(capsys):
    argv = ['verify', '--suite', 'mutation', '--trials', '1', '--cap', '3', '--format', 'json',
            '--no-timing']
    main.main(argv)
    first = capsys.readouterr().out
    main.main(argv)
    assert capsys.readouterr().out == first


def test_failing_scenario_exits_one(tmp_path, capsys):
    path = tmp_path / 'falla.scn'
    path.write_text(FAILING_SCENARIO, encoding='utf-8')
    assert main.main(['scenario', str(path), '--no-timing']) == config.EXIT_FAIL
    out = capsys.readouterr().out
    assert '✗ wrong [instance]: 6 dx^dy^dz' in out


def test_worked_scenario_passes(capsys):
    path = config.SCENARIOS_DIR / 'worked_sl2.scn'
    assert main.main(['scenario', str(path), '--format', 'json', '--no-timing']) == 0
    assert json.loads(capsys.readouterr().out)['scenario'] == 'worked_sl2'


def test_missing_scenario_file(tmp_path, capsys):
    code = main.main(['scenario', str(tmp_path / 'no_existe.scn')])
    assert code == config.EXIT_USAGE
    assert 'error:' in capsys.readouterr().err


def test_cap_too_small_is_usage_error(capsys):
    assert main.main(['verify', '--suite', 'instance', '--cap', '2']) == config.EXIT_USAGE
    assert 'cap too small' in capsys.readouterr().err


def test_malformed_scenario_is_usage_error(tmp_path, capsys):
    path = tmp_path / 'mal.scn'
    path.write_text("algebra: sl2\n---\ncheck c: tr(a ^ a\n", encoding='utf-8')
    assert main.main(['scenario', str(path)]) == config.EXIT_USAGE
    assert 'error:' in capsys.readouterr().err


def test_unknown_suite_is_rejected_by_argparse():
    with pytest.raises(SystemExit) as excinfo:
        main.main(['verify', '--suite', 'everything'])
    assert excinfo.value.code == 2


def test_save_writes_report(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(config, 'REPORTS_DIR', tmp_path / 'reportes')
    monkeypatch.setattr(config, 'RESULTS_DIR', tmp_path)
    monkeypatch.setattr(config, 'GOLDEN_DIR', tmp_path / 'golden')
    code = main.main(['verify', '--suite', 'symbolic', '--format', 'json', '--no-timing',
                      '--save'])
    assert code == 0
    assert list((tmp_path / 'reportes').glob('*.json'))


def test_installation_diagnostics():
    import verificar_sistema
    assert all(ok for ok, _ in verificar_sistema.verificar_estructura())
    assert all(ok for ok, _ in verificar_sistema.verificar_modulos())
    assert all(ok for ok, _ in verificar_sistema.verificar_algebras())
    assert not verificar_sistema.verificar_estructura(verificar_sistema.BASE_DIR / 'src')[0][0]


def test_unwritable_log_file_warns_and_continues(tmp_path, monkeypatch, capsys):
    blocker = tmp_path / 'ocupado'
    blocker.write_text('', encoding='utf-8')
    monkeypatch.setattr(config, 'LOG_FILE', blocker / 'verificacion.log')
    code = main.main(['verify', '--suite', 'symbolic', '--format', 'json', '--no-timing'])
    captured = capsys.readouterr()
    assert code == config.EXIT_PASS
    assert '⚠ no se pudo abrir el log' in captured.err
    assert json.loads(captured.out)['verdict'] == 'PASS'
