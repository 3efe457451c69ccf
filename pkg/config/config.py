"""
Archivo de configuración del sistema de verificación Chern-Simons/BF.
Centraliza rutas, parámetros numéricos, política de aleatoriedad y logging.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

from fractions import Fraction
from pathlib import Path

# ============================================================================
# RUTAS DEL PROYECTO
# ============================================================================

# Ruta base del proyecto
BASE_DIR = Path(__file__).resolve().parent.parent

# Rutas de resultados
RESULTS_DIR = BASE_DIR / "results"
REPORTS_DIR = RESULTS_DIR / "reportes"
GOLDEN_DIR = RESULTS_DIR / "golden"

# Escenarios incluidos con el proyecto
SCENARIOS_DIR = BASE_DIR / "scenarios"

# Archivo de log
LOG_FILE = RESULTS_DIR / "verificacion.log"


def ensure_directories():
    """Crea los directorios de resultados si no existen."""
    for directory in [RESULTS_DIR, REPORTS_DIR, GOLDEN_DIR]:
        directory.mkdir(parents=True, exist_ok=True)


# ============================================================================
# PARÁMETROS DE VERIFICACIÓN
# ============================================================================

# Álgebras disponibles
ALGEBRAS = ('sl2', 'sl3')
DEFAULT_ALGEBRA = 'sl2'

# Cap de jets (grado total máximo) y cap mínimo para suites con instancias:
# el chequeo de escisión aplica dos derivadas
DEFAULT_CAP = 4
MIN_INSTANCE_CAP = 3

# Ensayos aleatorios
DEFAULT_TRIALS = 20
STRUCTURAL_TRIALS = 100
DEFAULT_SEED = 7

# Valores del parámetro t (5 puntos certifican la dependencia cuadrática en t)
T_SWEEP = (Fraction(0), Fraction(1, 5), Fraction(1, 2), Fraction(4, 5), Fraction(1))

# Valores de t para la invariancia del superpotencial de difeomorfismos
SUPERPOTENTIAL_T = (Fraction(0), Fraction(1, 2), Fraction(1))

# Suites de verificación
SUITES = ('symbolic', 'instance', 'mutation', 'all')


# ============================================================================
# POLÍTICA DE COEFICIENTES ALEATORIOS
# ============================================================================

# Numeradores pequeños mantienen rápida la aritmética exacta
RANDOM_NUMERATORS = tuple(range(-3, 4))
RANDOM_DENOMINATORS = (1, 2, 3)
RANDOM_DENSITY = 0.5


# ============================================================================
# CONFIGURACIÓN DE REPORTES
# ============================================================================

REPORT_SCHEMA = "report_v1"
REPORT_FORMATS = ('text', 'json')

# Códigos de salida del proceso
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


# ============================================================================
# CONFIGURACIÓN DE LOGGING
# ============================================================================

LOGGING_CONFIG = {
    'level': 'INFO',
    'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    'datefmt': '%Y-%m-%d %H:%M:%S',
}


# ============================================================================
# FUNCIONES AUXILIARES
# ============================================================================

def get_verdict_interpretation(n_passed, n_checks):
    """
    Interpreta el resultado global de una suite.

    Args:
        n_passed (int): Chequeos aprobados
        n_checks (int): Chequeos ejecutados

    Returns:
        str: Interpretación del resultado
    """
    if n_checks == 0:
        return 'Sin chequeos ejecutados'
    elif n_passed == n_checks:
        return 'Todas las identidades verificadas'
    elif n_passed == 0:
        return 'Ninguna identidad verificada'
    else:
        return f'Verificación parcial: {n_checks - n_passed} chequeo(s) fallido(s)'
