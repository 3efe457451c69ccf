#!/usr/bin/env python3
"""
Diagnóstico de la instalación.

Comprueba dependencias, importación de módulos, axiomas de las álgebras y
ejecuta la suite simbólica como prueba de humo.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import sys
from pathlib import Path
from typing import Callable, List, Tuple

BASE_DIR = Path(__file__).resolve().parent
sys.path.insert(0, str(BASE_DIR))

REQUIRED_PATHS = ('src', 'config', 'scenarios', 'tests', 'main.py', 'oraculo_sl2.py',
                  'GRAMATICA.md', 'scenarios/worked_sl2.scn', 'scenarios/bf_bullet.scn')

DEPENDENCIES = (
    ('numpy', 'Generadores aleatorios con semilla y productos matriciales'),
    ('sympy', 'Álgebra lineal racional exacta'),
    ('pandas', 'Tablas de reportes'),
    ('tabulate', 'Formato de tablas'),
    ('pytest', 'Pruebas'),
    ('hypothesis', 'Pruebas basadas en propiedades'),
)

PROJECT_MODULES = (
    ('src.jets', 'Jet'),
    ('src.liealg', 'LieMatrix'),
    ('src.forms', 'GForm'),
    ('src.gauge', 'Connection'),
    ('src.chern', 'transgression'),
    ('src.symdga', 'verify_identity'),
    ('src.dsl', 'parse'),
    ('src.evaluation', 'InstanceEvaluator'),
    ('src.random_instances', 'InstanceGenerator'),
    ('src.verification', 'IdentityVerifier'),
    ('src.scenario', 'ScenarioLoader'),
    ('src.report_generator', 'ReportGenerator'),
)

Result = Tuple[bool, str]


# ============================================================================
# VERIFICACIONES
# ============================================================================

def verificar_python() -> List[Result]:
    v = sys.version_info
    return [(v >= (3, 10), f"Python {v.major}.{v.minor}.{v.micro} (se requiere >= 3.10)")]


def verificar_estructura(base: Path = BASE_DIR) -> List[Result]:
    return [((base / name).exists(), name) for name in REQUIRED_PATHS]


def verificar_dependencias() -> List[Result]:
    results = []
    for package, description in DEPENDENCIES:
        try:
            __import__(package)
            results.append((True, f"{package:15s} - {description}"))
        except ImportError:
            results.append((False, f"{package:15s} - {description} (NO INSTALADO)"))
    return results


def verificar_modulos() -> List[Result]:
    results = []
    for module_name, attribute in PROJECT_MODULES:
        label = module_name.replace('src.', '')
        try:
            getattr(__import__(module_name, fromlist=[attribute]), attribute)
            results.append((True, label))
        except Exception as e:
            results.append((False, f"{label} - Error: {str(e)[:50]}"))
    return results


def verificar_algebras() -> List[Result]:
    from src.liealg import ALGEBRAS
    results = []
    for name, spec in ALGEBRAS.items():
        axioms = spec.validate()
        results.append((all(axioms.values()), f"{name} (dimensión {spec.dim}): {axioms}"))
    return results


def verificar_suite_simbolica() -> List[Result]:
    from config import config
    from config.suite_manifest import MUTATIONS, SYMBOLIC_SUITE
    from src.verification import run_verify
    report = run_verify('symbolic', seed=config.DEFAULT_SEED, trials=1, cap=config.DEFAULT_CAP,
                        symbolic_suite=SYMBOLIC_SUITE, mutations=MUTATIONS, timing=False)
    return [(report.passed, f"suite simbólica {report.n_passed}/{len(report.checks)}")]


SECTIONS: Tuple[Tuple[str, Callable[[], List[Result]]], ...] = (
    ("Versión de Python", verificar_python),
    ("Estructura de directorios y archivos", verificar_estructura),
    ("Dependencias Python", verificar_dependencias),
    ("Módulos del proyecto", verificar_modulos),
    ("Constantes de estructura", verificar_algebras),
    ("Prueba de humo", verificar_suite_simbolica),
)


# ============================================================================
# FUNCIÓN PRINCIPAL
# ============================================================================

def main() -> int:
    print("=" * 80)
    print("VERIFICACIÓN DEL SISTEMA CHERN-SIMONS / BF")
    print("=" * 80)

    outcomes: List[bool] = []
    for number, (title, check) in enumerate(SECTIONS, start=1):
        print(f"\n{number}. {title}...")
        try:
            results = check()
        except Exception as e:
            results = [(False, f"Error: {str(e)[:60]}")]
        for ok, label in results:
            print(f"   {'✓' if ok else '✗'} {label}")
            outcomes.append(ok)

    print("\n" + "=" * 80)
    print(f"Verificaciones exitosas: {sum(outcomes)}/{len(outcomes)}")
    if all(outcomes):
        print("\n✅ SISTEMA COMPLETAMENTE FUNCIONAL")
        print("  python main.py verify --suite all --no-timing")
        print("  python main.py scenario scenarios/worked_sl2.scn")
        return 0
    print("\n⚠ SISTEMA INCOMPLETO: pip install -r requirements.txt")
    return 1


if __name__ == "__main__":
    sys.exit(main())
