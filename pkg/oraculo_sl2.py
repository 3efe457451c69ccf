#!/usr/bin/env python3
"""
Oráculo de fuerza bruta para el ejemplo trabajado en sl(2).

Con omega0 = 0 y alpha = E dx + F dy + H dz constante, la curvatura y la
derivada covariante se anulan y la forma de transgresión se reduce a

    Q = 2/3 tr(alpha ^ alpha ^ alpha)
      = 2/3 * sum_{sigma en S3} sgn(sigma) tr(A_s1 A_s2 A_s3) dx^dy^dz

y el superpotencial de gauge a U(H) = sum_i tr(A_i H) dx^i. Este script lo
calcula con matrices de numpy (objetos Fraction) sin usar los módulos de
src/, y escribe el resultado en results/golden/worked_sl2.json.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import json
import logging
import sys
from fractions import Fraction
from itertools import permutations
from pathlib import Path
from typing import Dict, Sequence

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

from config import config

# Configurar logging
logger = logging.getLogger(__name__)

COVECTORS = ('dx', 'dy', 'dz')

# Base de sl(2) en la realización fundamental
SL2_E = np.array([[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]], dtype=object)
SL2_F = np.array([[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)]], dtype=object)
SL2_H = np.array([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]], dtype=object)

GOLDEN_FILE = config.GOLDEN_DIR / 'worked_sl2.json'


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def _trace(matrix: np.ndarray) -> Fraction:
    return sum((matrix[i, i] for i in range(matrix.shape[0])), Fraction(0))


def _format(components: Dict[str, Fraction]) -> str:
    parts = [f"{coef} {name}" for name, coef in components.items() if coef != 0]
    if not parts:
        return '0'
    return ' + '.join(parts).replace('+ -', '- ')


def transgression_constant(alpha: Sequence[np.ndarray]) -> Fraction:
    """Coeficiente de dx^dy^dz en 2/3 tr(alpha^3) para alpha constante."""
    total = Fraction(0)
    for perm in permutations(range(3)):
        product = alpha[perm[0]].dot(alpha[perm[1]]).dot(alpha[perm[2]])
        total += _sign(perm) * _trace(product)
    return Fraction(2, 3) * total


def superpotential_constant(alpha: Sequence[np.ndarray], chi: np.ndarray) -> Dict[str, Fraction]:
    """Componentes de tr(alpha chi)."""
    return {name: _trace(a.dot(chi)) for name, a in zip(COVECTORS, alpha)}


def compute_worked_values() -> Dict[str, str]:
    """
    Valores del ejemplo trabajado, con el formato de impresión de formas.

    Returns:
        Dict[str, str]: {'Q': ..., 'U_H': ...}
    """
    alpha = (SL2_E, SL2_F, SL2_H)
    q = transgression_constant(alpha)
    u = superpotential_constant(alpha, SL2_H)
    return {
        'Q': _format({'dx^dy^dz': q}),
        'U_H': _format(u),
    }


def main() -> int:
    logging.basicConfig(level=logging.INFO, format=config.LOGGING_CONFIG['format'])
    values = compute_worked_values()
    data = {'scenario': 'worked_sl2', 'algebra': 'sl2', 'values': values}
    try:
        config.ensure_directories()
        with open(GOLDEN_FILE, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, ensure_ascii=False, sort_keys=True)
            f.write('\n')
    except OSError as e:
        logger.error(f"✗ Error al escribir el golden: {e}")
        return config.EXIT_USAGE
    logger.info(f"✓ Q = {values['Q']}, U(H) = {values['U_H']}")
    logger.info(f"✓ Golden guardado: {GOLDEN_FILE}")
    return config.EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
