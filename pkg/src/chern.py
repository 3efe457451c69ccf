"""
Módulo de funcionales Chern-Simons / BF.

Implementa, como expresiones independientes que luego se comparan entre sí:
- La 3-forma de transgresión Q(omega1, omega0) en sus dos presentaciones
- El lagrangiano de Chern-Simons no covariante y el desdoblamiento
  Q = CS(omega1) - CS(omega0) + d tr(omega0 ^ omega1)
- La presentación con conexión promedio (teoría BF con Lambda = 1)
- La familia interpolada omega_t = omega0 + t alpha, su lagrangiano y
  las ecuaciones de movimiento
- Los superpotenciales U(chi) y U(xi)

Ninguna identidad se sustituye a mano: cada presentación se calcula por
separado y las pruebas verifican que coinciden.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from .forms import (DegenerateOrderError, GForm, ScalarForm, VectorFieldSym, contract,
                    exterior_d, trace, wedge)
from .gauge import Connection, covariant_d, curvature
from .jets import Number
from .liealg import LieMatrix, SizeMismatchError

# Configurar logging
logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class ParameterRangeError(ValueError):
    """El parámetro t debe ser un racional exacto en [0, 1]."""


@dataclass(frozen=True)
class VariableChoice:
    """
    Elección de variables dinámicas (omega_t, alpha) con 0 <= t <= 1.

    t = 0 y t = 1 son las presentaciones con una conexión plana y una forma
    tensorial; t = 1/2 es la presentación BF con la conexión promedio.
    """
    t: Fraction

    def __post_init__(self):
        if isinstance(self.t, float):
            raise ParameterRangeError("t must be an exact rational, not a float")
        t = Fraction(self.t)
        if not 0 <= t <= 1:
            raise ParameterRangeError(f"t must lie in [0, 1], got {t}")
        object.__setattr__(self, 't', t)

    @property
    def label(self) -> str:
        if self.t == HALF:
            return 'bf_average'
        if self.t == 0:
            return 'flat_omega0_alpha'
        if self.t == 1:
            return 'flat_omega1_alpha'
        return 'interpolated'


def _choice(value: Union[VariableChoice, Number]) -> VariableChoice:
    return value if isinstance(value, VariableChoice) else VariableChoice(Fraction(value))


def _cube(a: GForm) -> GForm:
    return wedge(wedge(a, a), a)


@dataclass(frozen=True, eq=False)
class EOMResiduals:
    """
    Residuos de las ecuaciones de movimiento de la familia omega_t.

    Atributos:
        r_curv (GForm): Omega_t + t(1-t) alpha^2
        r_cov (GForm): D_t alpha - (2t-1) alpha^2
    """
    r_curv: GForm
    r_cov: GForm

    @property
    def valid_order(self) -> int:
        return min(self.r_curv.valid_order, self.r_cov.valid_order)

    def vanish(self) -> bool:
        order = self.valid_order
        return self.r_curv.is_zero(order) and self.r_cov.is_zero(order)


# ============================================================================
# TRANSGRESIÓN Y CHERN-SIMONS
# ============================================================================

def transgression(w1: Connection, w0: Connection) -> ScalarForm:
    """
    Q(omega1, omega0) = tr(2 Omega0 ^ alpha + D0 alpha ^ alpha + 2/3 alpha^3).

    Presentación definicional, con alpha = omega1 - omega0.

    Args:
        w1 (Connection): Conexión omega1
        w0 (Connection): Conexión omega0

    Returns:
        ScalarForm: 3-forma de transgresión
    """
    a = w1 - w0
    omega0 = curvature(w0)
    d0a = covariant_d(w0, a)
    body = (wedge(omega0, a).scale(2) + wedge(d0a, a)
            + _cube(a).scale(Fraction(2, 3)))
    return trace(body)


def transgression_alt(w1: Connection, w0: Connection) -> ScalarForm:
    """Segunda presentación: tr(2 Omega1 ^ alpha - D1 alpha ^ alpha + 2/3 alpha^3)."""
    a = w1 - w0
    omega1 = curvature(w1)
    d1a = covariant_d(w1, a)
    body = (wedge(omega1, a).scale(2) - wedge(d1a, a)
            + _cube(a).scale(Fraction(2, 3)))
    return trace(body)


def transgression_average(w1: Connection, w0: Connection) -> ScalarForm:
    """
    Presentación BF: 2 tr(Omega_barra ^ alpha + 1/12 alpha^3).

    La conexión promedio es omega_barra = (omega1 + omega0) / 2.
    """
    a = w1 - w0
    average = average_connection(w0, w1)
    body = wedge(curvature(average), a) + _cube(a).scale(Fraction(1, 12))
    return trace(body).scale(2)


def chern_simons(w: Connection) -> ScalarForm:
    """Lagrangiano no covariante CS(omega) = tr(Omega ^ omega - 1/3 omega^3)."""
    body = wedge(curvature(w), w.form) - _cube(w.form).scale(Fraction(1, 3))
    return trace(body)


def splitting_check(w1: Connection, w0: Connection) -> ScalarForm:
    """
    CS(omega1) - CS(omega0) + d tr(omega0 ^ omega1).

    Debe coincidir con transgression(w1, w0) al orden válido común.

    Raises:
        DegenerateOrderError: Si el orden válido de las entradas es menor que 2
    """
    order = min(w1.valid_order, w0.valid_order)
    if order < 2:
        raise DegenerateOrderError(
            f"degenerate order: splitting check needs valid_order >= 2, got {order}")
    boundary = exterior_d(trace(wedge(w0.form, w1.form)))
    return chern_simons(w1) - chern_simons(w0) + boundary


# ============================================================================
# CAMBIO DE VARIABLES
# ============================================================================

def average_connection(w0: Connection, w1: Connection) -> Connection:
    """omega_barra = (omega1 + omega0) / 2."""
    return Connection(w1.form.scale(HALF) + w0.form.scale(HALF))


def change_variables(w0: Connection, w1: Connection,
                     choice: Union[VariableChoice, Number]) -> Tuple[Connection, GForm]:
    """(omega0, omega1) -> (omega_t, alpha) con omega_t = t omega1 + (1-t) omega0."""
    t = _choice(choice).t
    w_t = Connection(w1.form.scale(t) + w0.form.scale(1 - t))
    return w_t, w1 - w0


def inverse_change(w_t: Connection, a: GForm,
                   choice: Union[VariableChoice, Number]) -> Tuple[Connection, Connection]:
    """Transformación inversa: omega0 = omega_t - t alpha, omega1 = omega_t + (1-t) alpha."""
    t = _choice(choice).t
    return w_t.shifted(a, -t), w_t.shifted(a, 1 - t)


def affine_identity(w0: Connection, w1: Connection,
                    choice: Union[VariableChoice, Number]) -> Tuple[GForm, GForm]:
    """
    Ambos lados de t omega1 + (t-1) omega0 = (2t-1) omega_t + 2t(1-t) alpha.

    Returns:
        Tuple[GForm, GForm]: (lado izquierdo, lado derecho)
    """
    t = _choice(choice).t
    w_t, a = change_variables(w0, w1, t)
    lhs = w1.form.scale(t) + w0.form.scale(t - 1)
    rhs = w_t.form.scale(2 * t - 1) + a.scale(2 * t * (1 - t))
    return lhs, rhs


def curvature_interpolation(w0: Connection, w1: Connection,
                            choice: Union[VariableChoice, Number]) -> Tuple[GForm, GForm]:
    """
    (Omega_t, t Omega1 + (1-t) Omega0 - t(1-t) alpha^2).

    Returns:
        Tuple[GForm, GForm]: curvatura de omega_t y la fórmula afín
    """
    t = _choice(choice).t
    w_t, a = change_variables(w0, w1, t)
    direct = curvature(w_t)
    affine = (curvature(w1).scale(t) + curvature(w0).scale(1 - t)
              - wedge(a, a).scale(t * (1 - t)))
    return direct, affine


def two_connection_chain(w0: Connection, w1: Connection) -> Tuple[GForm, GForm, GForm, GForm]:
    """
    Cadena de igualdades para dos conexiones:
    2 Omega0 + D0 alpha, 2 Omega1 - D1 alpha, Omega0 + Omega1 + (D0 alpha - D1 alpha)/2,
    Omega0 + Omega1 - alpha^2.
    """
    a = w1 - w0
    omega0, omega1 = curvature(w0), curvature(w1)
    d0a, d1a = covariant_d(w0, a), covariant_d(w1, a)
    return (
        omega0.scale(2) + d0a,
        omega1.scale(2) - d1a,
        omega0 + omega1 + (d0a - d1a).scale(HALF),
        omega0 + omega1 - wedge(a, a),
    )


def identity7_check(w0: Connection, w1: Connection,
                    choice: Union[VariableChoice, Number]) -> Tuple[GForm, GForm, GForm]:
    """
    Las tres expresiones que deben coincidir para todo t:
    2 Omega1 - D1 alpha, 2 Omega0 + D0 alpha y
    2 Omega_t - 2t(1-t) alpha^2 - (2t-1) D_t alpha.
    """
    t = _choice(choice).t
    a = w1 - w0
    w_t = w0.shifted(a, t)
    first = curvature(w1).scale(2) - covariant_d(w1, a)
    second = curvature(w0).scale(2) + covariant_d(w0, a)
    third = (curvature(w_t).scale(2) - wedge(a, a).scale(2 * t * (1 - t))
             - covariant_d(w_t, a).scale(2 * t - 1))
    return first, second, third


def q_general(w_t: Connection, a: GForm, choice: Union[VariableChoice, Number]) -> ScalarForm:
    """
    Lagrangiano en las variables (omega_t, alpha):
    2 tr(Omega_t ^ alpha - (t - 1/2) D_t alpha ^ alpha + (1/3 - t + t^2) alpha^3).
    """
    t = _choice(choice).t
    body = (wedge(curvature(w_t), a)
            - wedge(covariant_d(w_t, a), a).scale(t - HALF)
            + _cube(a).scale(Fraction(1, 3) - t + t * t))
    return trace(body).scale(2)


# ============================================================================
# ECUACIONES DE MOVIMIENTO
# ============================================================================

def eom_residuals(w_t: Connection, a: GForm,
                  choice: Union[VariableChoice, Number]) -> EOMResiduals:
    """
    Residuos de Omega_t = -t(1-t) alpha^2 y D_t alpha = (2t-1) alpha^2.

    Para t = 1/2 se obtienen los de la teoría BF: Omega_barra + alpha^2/4 y D_barra alpha.
    """
    t = _choice(choice).t
    a2 = wedge(a, a)
    r_curv = curvature(w_t) + a2.scale(t * (1 - t))
    r_cov = covariant_d(w_t, a) - a2.scale(2 * t - 1)
    return EOMResiduals(r_curv, r_cov)


def presentation_residuals(w0: Connection, w1: Connection) -> Dict[str, Tuple[GForm, GForm]]:
    """
    Ecuaciones de movimiento de las tres presentaciones equivalentes.

    Returns:
        Dict: 'two_connections' -> (Omega0, Omega1),
              'connection_tensorial' -> (Omega1, D1 alpha - alpha^2),
              'bf' -> (Omega_barra + alpha^2/4, D_barra alpha)
    """
    a = w1 - w0
    a2 = wedge(a, a)
    average = average_connection(w0, w1)
    return {
        'two_connections': (curvature(w0), curvature(w1)),
        'connection_tensorial': (curvature(w1), covariant_d(w1, a) - a2),
        'bf': (curvature(average) + a2.scale(Fraction(1, 4)), covariant_d(average, a)),
    }


# ============================================================================
# SUPERPOTENCIALES
# ============================================================================

def superpotential_gauge(a: GForm, chi: LieMatrix) -> ScalarForm:
    """U(chi) = tr(alpha chi), independiente de la elección de variables."""
    if a.size != chi.size:
        raise SizeMismatchError(f"size mismatch: {a.size} vs {chi.size}")
    return trace(wedge(a, GForm.from_matrix(chi)))


def superpotential_diffeo(a: GForm, w_t: Connection, choice: Union[VariableChoice, Number],
                          xi: VectorFieldSym) -> ScalarForm:
    """U(xi) = tr[alpha (2 omega_t(xi) + (1-2t) alpha(xi))]."""
    t = _choice(choice).t
    if a.degree != 1:
        raise ValueError(f"alpha debe ser una 1-forma (grado {a.degree})")
    if a.size != w_t.size:
        raise SizeMismatchError(f"size mismatch: {a.size} vs {w_t.size}")
    inner = contract(xi, w_t.form).scale(2) + contract(xi, a).scale(1 - 2 * t)
    return trace(wedge(a, inner))
