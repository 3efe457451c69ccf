"""
Manifiesto de identidades de la suite simbólica y de sus mutaciones.

Cada entrada lista pares (lado izquierdo, lado derecho) escritos en el DSL.
Una entrada con 't': 'sweep' se verifica para cada valor de config.T_SWEEP;
una lista explícita de valores fija los t usados. Las mutaciones cambian un
único coeficiente y deben FALLAR en ambos backends.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

from fractions import Fraction

# ============================================================================
# EXPRESIONES BASE
# ============================================================================

# Q(w1, w0) en su presentación definicional
TRANSGRESSION = "tr(2*F(w0) ^ a + D(w0; a) ^ a + 2/3*a ^ a ^ a)"

# Q(w1, w0) en la presentación con omega1
TRANSGRESSION_ALT = "tr(2*F(w1) ^ a - D(w1; a) ^ a + 2/3*a ^ a ^ a)"

# Q(w0, w1), escrita sin el atajo a
TRANSGRESSION_SWAPPED = (
    "tr(2*F(w1) ^ (w0 - w1) + D(w1; w0 - w1) ^ (w0 - w1)"
    " + 2/3*(w0 - w1) ^ (w0 - w1) ^ (w0 - w1))"
)

CS_DIFFERENCE = (
    "tr(F(w1) ^ w1 - {c1}*w1 ^ w1 ^ w1) - tr(F(w0) ^ w0 - 1/3*w0 ^ w0 ^ w0)"
    " + {c2}d(tr(w0 ^ w1))"
)

AVERAGE_BF = "{c0}tr(F(1/2*w0 + 1/2*w1) ^ a + {c1}*a ^ a ^ a)"

GENERAL_LAGRANGIAN = "2*tr(F(wt) ^ a - (t - {c1})*D(wt; a) ^ a + ({c2})*a ^ a ^ a)"

TWO_CONNECTIONS = "2*F(w0) + D(w0; a)"


# ============================================================================
# SUITE SIMBÓLICA (8 chequeos)
# ============================================================================

SYMBOLIC_SUITE = {
    'dual_presentation': {
        'descripcion': 'Las dos presentaciones de la 3-forma de transgresión coinciden',
        'pares': [(TRANSGRESSION, TRANSGRESSION_ALT)],
        't': None,
    },
    'antisymmetry': {
        'descripcion': 'Q(w1, w0) + Q(w0, w1) = 0',
        'pares': [(f"{TRANSGRESSION} + {TRANSGRESSION_SWAPPED}", "0")],
        't': None,
    },
    'cs_splitting': {
        'descripcion': 'Q = CS(w1) - CS(w0) + d tr(w0 ^ w1)',
        'pares': [(TRANSGRESSION, CS_DIFFERENCE.format(c1='1/3', c2=''))],
        't': None,
    },
    'two_connection_chain': {
        'descripcion': 'Cadena de igualdades del caso de dos conexiones',
        'pares': [
            (TWO_CONNECTIONS, "2*F(w1) - D(w1; a)"),
            (TWO_CONNECTIONS, "F(w0) + F(w1) + 1/2*(D(w0; a) - D(w1; a))"),
            (TWO_CONNECTIONS, "F(w0) + F(w1) - a ^ a"),
        ],
        't': None,
    },
    'average_bf': {
        'descripcion': 'Presentación BF 2 tr(F(w_barra) ^ a + 1/12 a^3)',
        'pares': [(TRANSGRESSION, AVERAGE_BF.format(c0='2*', c1='1/12'))],
        't': None,
    },
    'interpolated_equations': {
        'descripcion': 'Forma general de las ecuaciones para todo t',
        'pares': [
            (TWO_CONNECTIONS, "2*F(wt) - 2*t*(1 - t)*a ^ a - (2*t - 1)*D(wt; a)"),
            ("2*F(w1) - D(w1; a)", "2*F(wt) - 2*t*(1 - t)*a ^ a - (2*t - 1)*D(wt; a)"),
        ],
        't': 'sweep',
    },
    'interpolated_lagrangian': {
        'descripcion': 'Lagrangiano en las variables (wt, a)',
        'pares': [(TRANSGRESSION, GENERAL_LAGRANGIAN.format(c1='1/2', c2='1/3 - t + t**2'))],
        't': 'sweep',
    },
    'change_of_variables': {
        'descripcion': 'Transformación inversa, identidad afín y curvatura interpolada',
        'pares': [
            ("wt - t*a", "w0"),
            ("wt + (1 - t)*a", "w1"),
            ("t*w1 + (t - 1)*w0", "(2*t - 1)*wt + 2*t*(1 - t)*a"),
            ("F(wt)", "t*F(w1) + (1 - t)*F(w0) - t*(1 - t)*a ^ a"),
        ],
        't': 'sweep',
    },
}


# ============================================================================
# MUTACIONES (cada una debe fallar)
# ============================================================================

MUTATIONS = {
    'mut_cs_cubic': {
        'descripcion': 'CS(w1) con 1/2 en lugar de 1/3',
        'pares': [(TRANSGRESSION, CS_DIFFERENCE.format(c1='1/2', c2=''))],
        't': None,
    },
    'mut_cs_boundary': {
        'descripcion': 'Término de borde con coeficiente 2 en lugar de 1',
        'pares': [(TRANSGRESSION, CS_DIFFERENCE.format(c1='1/3', c2='2*'))],
        't': None,
    },
    'mut_bf_cubic': {
        'descripcion': 'Término cúbico BF con 1/6 en lugar de 1/12',
        'pares': [(TRANSGRESSION, AVERAGE_BF.format(c0='2*', c1='1/6'))],
        't': None,
    },
    'mut_bf_overall': {
        'descripcion': 'Factor global 1 en lugar de 2',
        'pares': [(TRANSGRESSION, AVERAGE_BF.format(c0='', c1='1/12'))],
        't': None,
    },
    'mut_lagrangian_linear': {
        'descripcion': '(t - 1/3) en lugar de (t - 1/2), a t = 1/5',
        'pares': [(TRANSGRESSION, GENERAL_LAGRANGIAN.format(c1='1/3', c2='1/3 - t + t**2'))],
        't': [Fraction(1, 5)],
    },
    'mut_lagrangian_quadratic': {
        'descripcion': '(1/3 - t) en lugar de (1/3 - t + t^2), a t = 4/5',
        'pares': [(TRANSGRESSION, GENERAL_LAGRANGIAN.format(c1='1/2', c2='1/3 - t'))],
        't': [Fraction(4, 5)],
    },
}
