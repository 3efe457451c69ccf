#!/usr/bin/env python3
"""
Script principal del sistema de verificación Chern-Simons/BF.

Subcomandos:
1. verify: ejecuta las suites de identidades (simbólica, instancias, mutaciones)
2. scenario: carga un archivo .scn y ejecuta sus chequeos

El reporte se escribe en stdout (texto o JSON); el log va a stderr y a
results/verificacion.log.

Códigos de salida: 0 todo PASS, 1 algún chequeo FAIL, 2 error de uso, de
formato o de E/S.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Agregar el directorio del proyecto al path
sys.path.insert(0, str(Path(__file__).parent))

# Importar módulos del proyecto
from src.dsl import DSLError
from src.report_generator import Report, ReportGenerator
from src.scenario import ScenarioError, run_scenario
from src.verification import UsageError, run_verify

# Importar configuración
from config import config
from config.suite_manifest import MUTATIONS, SYMBOLIC_SUITE

logger = logging.getLogger(__name__)


# ============================================================================
# CONFIGURACIÓN DE LOGGING
# ============================================================================

def configurar_logging(log_file: Optional[Path] = config.LOG_FILE) -> None:
    """
    Configura el logging: stderr y, si es posible, archivo UTF-8.

    Args:
        log_file (Path): Archivo de log (None para no escribir a disco)
    """
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file is not None:
        try:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
        except OSError as e:
            print(f"⚠ no se pudo abrir el log {log_file}: {e}", file=sys.stderr)
    logging.basicConfig(
        level=getattr(logging, config.LOGGING_CONFIG['level']),
        format=config.LOGGING_CONFIG['format'],
        datefmt=config.LOGGING_CONFIG['datefmt'],
        handlers=handlers,
        force=True,
    )


# ============================================================================
# ARGUMENTOS
# ============================================================================

def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format', choices=config.REPORT_FORMATS, default='text',
                        help='Formato del reporte en stdout (default: text)')
    parser.add_argument('--no-timing', action='store_true',
                        help='Omitir tiempos y fecha (reportes byte a byte reproducibles)')
    parser.add_argument('--save', action='store_true',
                        help=f'Guardar además el reporte en {config.REPORTS_DIR}')
    parser.add_argument('--quiet', action='store_true',
                        help='Solo advertencias y errores en el log')


def build_parser() -> argparse.ArgumentParser:
    """Construye el parser de la línea de comandos."""
    parser = argparse.ArgumentParser(
        prog='main.py',
        description='Verificación exacta de identidades Chern-Simons / BF en 3 dimensiones')
    subparsers = parser.add_subparsers(dest='command', required=True)

    verify = subparsers.add_parser('verify', help='Ejecutar suites de identidades')
    verify.add_argument('--suite', choices=config.SUITES, default='all',
                        help='Suite a ejecutar (default: all)')
    verify.add_argument('--trials', type=int, default=config.DEFAULT_TRIALS,
                        help=f'Ensayos aleatorios por identidad (default: {config.DEFAULT_TRIALS})')
    verify.add_argument('--seed', type=int, default=config.DEFAULT_SEED,
                        help=f'Semilla raíz (default: {config.DEFAULT_SEED})')
    verify.add_argument('--cap', type=int, default=config.DEFAULT_CAP,
                        help=f'Grado total máximo de los jets (default: {config.DEFAULT_CAP})')
    verify.add_argument('--algebra', choices=config.ALGEBRAS, default=config.DEFAULT_ALGEBRA,
                        help='Álgebra de Lie (default: sl2)')
    verify.add_argument('--structural-trials', type=int, default=config.STRUCTURAL_TRIALS,
                        help='Valores aleatorios por propiedad estructural')
    _add_output_arguments(verify)

    scenario = subparsers.add_parser('scenario', help='Ejecutar un archivo de escenario')
    scenario.add_argument('path', type=Path, help='Archivo .scn')
    scenario.add_argument('--cap', type=int, default=config.DEFAULT_CAP,
                          help='Cap si el escenario no lo fija')
    _add_output_arguments(scenario)
    return parser


# ============================================================================
# FUNCIONES PRINCIPALES
# ============================================================================

def ejecutar_verify(args: argparse.Namespace) -> Report:
    """Ejecuta la suite pedida con los valores de config."""
    return run_verify(
        args.suite, seed=args.seed, trials=args.trials, cap=args.cap, algebra=args.algebra,
        structural_trials=args.structural_trials,
        symbolic_suite=SYMBOLIC_SUITE, mutations=MUTATIONS,
        t_sweep=config.T_SWEEP, superpotential_t=config.SUPERPOTENTIAL_T,
        min_cap=config.MIN_INSTANCE_CAP, timing=not args.no_timing,
        policy={'numerators': config.RANDOM_NUMERATORS,
                'denominators': config.RANDOM_DENOMINATORS,
                'density': config.RANDOM_DENSITY},
    )


def ejecutar_scenario(args: argparse.Namespace) -> Report:
    """Carga y ejecuta un escenario."""
    return run_scenario(args.path, default_cap=args.cap, timing=not args.no_timing)


def emitir_reporte(report: Report, args: argparse.Namespace) -> None:
    """Escribe el reporte en stdout y, con --save, en results/reportes."""
    generator = ReportGenerator(config.REPORTS_DIR, config.REPORT_SCHEMA,
                                timing=not args.no_timing)
    interpretation = config.get_verdict_interpretation(report.n_passed, len(report.checks))
    sys.stdout.write(generator.render(report, args.format, interpretation))
    sys.stdout.flush()
    if args.save:
        config.ensure_directories()
        generator.save(report, args.format, interpretation=interpretation)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Punto de entrada de la línea de comandos.

    Returns:
        int: Código de salida (0 PASS, 1 FAIL, 2 error de uso o de E/S)
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configurar_logging(config.LOG_FILE)
    if args.quiet:
        logging.getLogger().setLevel(logging.WARNING)

    logger.info("=" * 80)
    logger.info("SISTEMA DE VERIFICACIÓN CHERN-SIMONS / BF")
    logger.info("=" * 80)

    try:
        if args.command == 'verify':
            report = ejecutar_verify(args)
        else:
            report = ejecutar_scenario(args)
    except (UsageError, DSLError, ScenarioError) as e:
        logger.error(f"✗ {e}")
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_USAGE
    except OSError as e:
        logger.error(f"✗ Error de E/S: {e}")
        print(f"error: {e}", file=sys.stderr)
        return config.EXIT_USAGE

    emitir_reporte(report, args)
    if report.passed:
        logger.info(f"✓ Veredicto: PASS ({report.n_passed}/{len(report.checks)})")
        return config.EXIT_PASS
    logger.warning(f"⚠ Veredicto: FAIL ({report.n_passed}/{len(report.checks)})")
    return config.EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
