"""
Módulo de conexiones, curvatura y transformaciones de gauge.

Incluye:
- Connection: 1-forma con valores en el álgebra (omega_i, omega_barra, omega_t)
- GroupJet: elemento local del grupo g con su inversa en caché
- Curvatura Omega = d omega + omega^2 y derivada covariante D alpha = d alpha + [omega, alpha]
- Transformación de gauge g^-1 omega g + g^-1 dg y conexiones planas g^-1 dg

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .forms import GForm, exterior_d, gbracket, wedge
from .jets import Number
from .liealg import LieMatrix, rational_determinant

# Configurar logging
logger = logging.getLogger(__name__)


class ConnectionDegreeError(ValueError):
    """Una conexión debe ser exactamente una 1-forma."""


@dataclass(frozen=True, eq=False)
class Connection:
    """
    Conexión local: GForm de grado exactamente 1.

    Atributos:
        form (GForm): La 1-forma con valores en el álgebra
    """
    form: GForm

    def __post_init__(self):
        if not isinstance(self.form, GForm) or self.form.degree != 1:
            degree = getattr(self.form, 'degree', None)
            raise ConnectionDegreeError(f"una conexión debe tener grado 1 (recibido: {degree})")

    @classmethod
    def zero(cls, size: int, valid_order: int) -> 'Connection':
        return cls(GForm.zero(1, size, valid_order))

    @property
    def size(self) -> int:
        return self.form.size

    @property
    def valid_order(self) -> int:
        return self.form.valid_order

    def __add__(self, other: Union['Connection', GForm]) -> 'Connection':
        other_form = other.form if isinstance(other, Connection) else other
        return Connection(self.form + other_form)

    def __sub__(self, other: Union['Connection', GForm]) -> GForm:
        """La diferencia de dos conexiones es una 1-forma tensorial, no una conexión."""
        other_form = other.form if isinstance(other, Connection) else other
        return self.form - other_form

    def shifted(self, a: GForm, t: Number) -> 'Connection':
        """omega + t * a."""
        return Connection(self.form + a.scale(t))

    def agrees_with(self, other: 'Connection', order=None) -> bool:
        return self.form.agrees_with(other.form, order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Connection):
            return NotImplemented
        return self.form == other.form

    __hash__ = None


class GroupJet:
    """
    Elemento local del grupo de gauge g con su inversa.

    Atributos:
        matrix (LieMatrix): g
        inverse (LieMatrix): g^-1 (calculada en el anillo truncado)
    """

    __slots__ = ('matrix', 'inverse')

    def __init__(self, matrix: LieMatrix, inverse: LieMatrix = None):
        det0 = _constant_determinant(matrix)
        if det0 == 0:
            raise ArithmeticError("group element is not invertible (constant determinant is 0)")
        self.matrix = matrix
        self.inverse = inverse if inverse is not None else matrix.inverse()

    @classmethod
    def identity(cls, size: int, cap: int) -> 'GroupJet':
        one = LieMatrix.identity(size, cap)
        return cls(one, one)

    @classmethod
    def near_identity(cls, perturbation: LieMatrix) -> 'GroupJet':
        """g = I + N con N del álgebra y sin término constante."""
        return cls(LieMatrix.identity(perturbation.size, perturbation.cap) + perturbation)

    @property
    def size(self) -> int:
        return self.matrix.size

    @property
    def cap(self) -> int:
        return self.matrix.cap


def _constant_determinant(matrix: LieMatrix) -> Fraction:
    return rational_determinant([[e.constant_term for e in row] for row in matrix.entries])


# ============================================================================
# CURVATURA Y DERIVADA COVARIANTE
# ============================================================================

def curvature(w: Connection) -> GForm:
    """
    Curvatura Omega = d omega + omega^omega.

    Raises:
        DegenerateOrderError: Si valid_order < 1
    """
    return exterior_d(w.form) + wedge(w.form, w.form)


def covariant_d(w: Connection, a: GForm) -> GForm:
    """Derivada covariante D alpha = d alpha + [omega, alpha] de una forma tensorial."""
    return exterior_d(a) + gbracket(w.form, a)


def _conjugate(g: GroupJet, a: GForm) -> GForm:
    """g^-1 a g para cualquier forma con valores en el álgebra."""
    left = GForm.from_matrix(g.inverse)
    right = GForm.from_matrix(g.matrix)
    return wedge(wedge(left, a), right)


def gauge_transform(g: GroupJet, w: Connection) -> Connection:
    """
    Transformación de gauge g^-1 omega g + g^-1 dg.

    El orden válido resultante es min(orden de omega, cap(g) - 1).
    """
    maurer_cartan = wedge(GForm.from_matrix(g.inverse), exterior_d(GForm.from_matrix(g.matrix)))
    return Connection(_conjugate(g, w.form) + maurer_cartan)


def gauge_transform_tensorial(g: GroupJet, a: GForm) -> GForm:
    """Ley tensorial g^-1 alpha g (sin término inhomogéneo)."""
    return _conjugate(g, a)


def flat_connection(g: GroupJet) -> Connection:
    """Conexión pura gauge omega = g^-1 dg, de curvatura nula."""
    dg = exterior_d(GForm.from_matrix(g.matrix))
    return Connection(wedge(GForm.from_matrix(g.inverse), dg))
