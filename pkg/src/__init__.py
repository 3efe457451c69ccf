"""
Paquete de verificación exacta de identidades Chern-Simons / BF en 3 dimensiones.

Este paquete proporciona:
- Aritmética exacta de jets (series de Taylor truncadas con coeficientes racionales)
- Álgebras de Lie matriciales sl(2) y sl(3)
- Formas diferenciales con valores en el álgebra, traza y contracción
- Conexiones, curvatura y transformaciones de gauge
- Formas de transgresión, cambios de variables y superpotenciales
- Normalizador simbólico del álgebra diferencial graduada libre
- Un lenguaje de expresiones (DSL) con analizador, tipos e impresión
- Suites de verificación, escenarios y reportes

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

__version__ = '1.0.0'
__author__ = 'Sistema de Verificación Chern-Simons/BF'

# Importar clases principales para acceso directo
from .jets import Jet
from .liealg import LieMatrix, get_algebra
from .forms import GForm, ScalarForm, VectorFieldSym
from .gauge import Connection, GroupJet
from .symdga import verify_identity
from .dsl import parse, pretty_print
from .verification import IdentityVerifier, run_verify
from .scenario import ScenarioLoader, ScenarioRunner, run_scenario
from .report_generator import ReportGenerator

__all__ = [
    'Jet',
    'LieMatrix',
    'get_algebra',
    'GForm',
    'ScalarForm',
    'VectorFieldSym',
    'Connection',
    'GroupJet',
    'verify_identity',
    'parse',
    'pretty_print',
    'IdentityVerifier',
    'run_verify',
    'ScenarioLoader',
    'ScenarioRunner',
    'run_scenario',
    'ReportGenerator',
]
