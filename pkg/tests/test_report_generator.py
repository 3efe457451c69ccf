"""
Pruebas del generador de reportes.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import json

import pytest

from src.report_generator import CheckResult, Report, ReportGenerator


@pytest.fixture
def report():
    return Report('verify', 'symbolic', 'sl2', 4, seed=7, trials=20, checks=[
        CheckResult('average_bf', 'symbolic', True),
        CheckResult('antisymmetry', 'symbolic', True, detail='Q(w1, w0) + Q(w0, w1) = 0'),
        CheckResult('cs_splitting', 'instance', False, valid_order=2,
                    certificate='-1/6*tr(a ^ a ^ a)'),
        CheckResult('cs_splitting', 'symbolic', True),
    ])


def test_verdict_requires_all_checks(report):
    assert not report.passed
    assert report.verdict == 'FAIL'
    assert report.n_passed == 3


def test_checks_sorted_by_id_and_backend(report):
    order = [(c.id, c.backend) for c in report.sorted_checks()]
    assert order == [('antisymmetry', 'symbolic'), ('average_bf', 'symbolic'),
                     ('cs_splitting', 'instance'), ('cs_splitting', 'symbolic')]


def test_json_schema(report, tmp_path):
    data = json.loads(ReportGenerator(tmp_path, timing=False).render_json(report))
    assert data['schema'] == 'report_v1'
    assert data['suite'] == 'symbolic'
    assert data['verdict'] == 'FAIL'
    assert data['n_checks'] == 4
    assert data['checks'][0]['id'] == 'antisymmetry'
    assert all(c['wall_time'] is None for c in data['checks'])
    assert data['checks'][2]['certificate'] == '-1/6*tr(a ^ a ^ a)'


def test_json_is_stable(report, tmp_path):
    generator = ReportGenerator(tmp_path, timing=False)
    assert generator.render_json(report) == generator.render_json(report)
    text = generator.render_json(report)
    assert text.endswith('\n')
    assert list(json.loads(text)) == sorted(json.loads(text))


def test_scenario_reports_use_scenario_key(tmp_path):
    data = Report('scenario', 'worked_sl2', 'sl2', 3).to_dict()
    assert data['scenario'] == 'worked_sl2'
    assert 'suite' not in data
    assert data['verdict'] == 'PASS'


def test_text_report(report, tmp_path):
    text = ReportGenerator(tmp_path, timing=False).render_text(report, 'interpretación')
    assert 'REPORTE DE VERIFICACIÓN - SUITE: symbolic' in text
    assert 'average_bf' in text
    assert '✗ cs_splitting [instance]: -1/6*tr(a ^ a ^ a)' in text
    assert 'Veredicto: FAIL (3/4)' in text
    assert 'Fecha de generación' not in text


def test_dataframe_columns(report, tmp_path):
    df = ReportGenerator(tmp_path).to_dataframe(report)
    assert list(df['Chequeo']) == ['antisymmetry', 'average_bf', 'cs_splitting',
                                   'cs_splitting']
    assert list(df['Orden válido']) == ['-', '-', 2, '-']


def test_save_writes_file(report, tmp_path):
    path = ReportGenerator(tmp_path / 'out', timing=False).save(report, 'json', 'reporte')
    assert path.endswith('reporte.json')
    assert json.loads((tmp_path / 'out' / 'reporte.json').read_text(encoding='utf-8'))
