"""
Módulo de evaluación concreta (backend de instancias) de expresiones del DSL.

Asigna a cada nodo del AST un valor exacto:
- número (Fraction) para literales, t y potencias numéricas
- ScalarForm para coordenadas, covectores y trazas
- GForm para formas con valores en el álgebra
- VectorFieldSym para campos vectoriales (solo dentro de ic)

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Union

from . import dsl
from .forms import (GForm, ScalarForm, VectorFieldSym, contract, exterior_d, gbracket, trace,
                    wedge)
from .gauge import Connection, covariant_d, curvature
from .jets import AXES, Jet
from .liealg import LieAlgebraSpec, LieMatrix

# Configurar logging
logger = logging.getLogger(__name__)

Value = Union[Fraction, ScalarForm, GForm, VectorFieldSym]


@dataclass(frozen=True)
class Comparison:
    """
    Resultado de comparar dos valores concretos.

    Atributos:
        passed (bool): Igualdad exacta hasta el orden válido común
        valid_order (int): Orden al que se afirmó la igualdad (None para números)
        certificate (str): Diferencia no nula si falla
    """
    passed: bool
    valid_order: Optional[int] = None
    certificate: str = ''


class InstanceEvaluator:
    """
    Evalúa ASTs del DSL sobre datos concretos (jets racionales).

    Los nombres ``a`` y ``wt`` se derivan de ``w0`` y ``w1`` si no están
    ligados explícitamente: a = w1 - w0 y wt = w0 + t a.
    """

    def __init__(self, spec: LieAlgebraSpec, cap: int,
                 bindings: Optional[Mapping[str, object]] = None, t=None):
        """
        Inicializa el evaluador.

        Args:
            spec (LieAlgebraSpec): Álgebra de Lie (define el tamaño de matriz)
            cap (int): Cap de jets para constantes y coordenadas
            bindings (Mapping, optional): Nombre -> Connection, GForm,
                ScalarForm, LieMatrix, VectorFieldSym o número
            t (Number, optional): Valor del parámetro t
        """
        self.spec = spec
        self.cap = cap
        self.t = None if t is None else Fraction(t)
        self.bindings: Dict[str, Value] = {}
        for name, value in (bindings or {}).items():
            self.bind(name, value)

    def bind(self, name: str, value) -> None:
        """Liga un nombre normalizando Connection y LieMatrix a GForm."""
        if isinstance(value, Connection):
            value = value.form
        elif isinstance(value, LieMatrix):
            value = GForm.from_matrix(value)
        elif isinstance(value, int):
            value = Fraction(value)
        self.bindings[name] = value

    def with_t(self, t) -> 'InstanceEvaluator':
        """Copia del evaluador con otro valor de t."""
        return InstanceEvaluator(self.spec, self.cap, self.bindings, t)

    # ------------------------------------------------------------------
    # Símbolos
    # ------------------------------------------------------------------

    def _parameter(self, node: dsl.Node) -> Fraction:
        if self.t is None:
            raise dsl.UnknownSymbolError("parameter 't' has no value", *node.pos)
        return self.t

    def lookup(self, node: dsl.Symbol) -> Value:
        name = node.name
        if name in self.bindings:
            return self.bindings[name]
        if name == 'a' and {'w0', 'w1'} <= self.bindings.keys():
            return self.bindings['w1'] - self.bindings['w0']
        if name == 'wt' and 'w0' in self.bindings:
            a = self.lookup(dsl.Symbol('a', pos=node.pos))
            return self.bindings['w0'] + a.scale(self._parameter(node))
        if name in AXES:
            return ScalarForm(0, {(): Jet.coordinate(name, self.cap)}, self.cap)
        if name in ('dx', 'dy', 'dz'):
            k = AXES.index(name[1])
            return ScalarForm(1, {(k,): Jet.constant(1, self.cap)}, self.cap)
        if name == 'I':
            return GForm.from_matrix(LieMatrix.identity(self.spec.matrix_size, self.cap))
        if name in self.spec.basis_names:
            return GForm.from_matrix(self.spec.basis_element(name, self.cap))
        raise dsl.UnknownSymbolError(f"unknown symbol '{name}'", *node.pos)

    # ------------------------------------------------------------------
    # Evaluación
    # ------------------------------------------------------------------

    def _as_form(self, number: Fraction) -> ScalarForm:
        return ScalarForm(0, {(): Jet.constant(number, self.cap)}, self.cap)

    def _add(self, left: Value, right: Value) -> Value:
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left + right
        if isinstance(left, Fraction):
            left = self._as_form(left)
        if isinstance(right, Fraction):
            right = self._as_form(right)
        return left + right

    def _multiply(self, left: Value, right: Value) -> Value:
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left * right
        if isinstance(left, Fraction):
            return right.scale(left)
        if isinstance(right, Fraction):
            return left.scale(right)
        return wedge(left, right)

    def _power(self, base: Value, exponent: int) -> Value:
        if isinstance(base, Fraction):
            return base ** exponent
        coef = base.component(()) or Jet.zero(self.cap)
        return ScalarForm(0, {(): coef ** exponent}, base.valid_order)

    def evaluate(self, node: dsl.Node) -> Value:
        """
        Valor concreto de un AST.

        Raises:
            UnknownSymbolError: Nombre sin ligar
            DegenerateOrderError: Derivadas sin orden válido suficiente
        """
        if isinstance(node, dsl.Rational):
            return node.value
        if isinstance(node, dsl.Param):
            return self._parameter(node)
        if isinstance(node, dsl.Symbol):
            return self.lookup(node)
        if isinstance(node, dsl.Add):
            return self._add(self.evaluate(node.left), self.evaluate(node.right))
        if isinstance(node, dsl.Sub):
            return self._add(self.evaluate(node.left), -self.evaluate(node.right))
        if isinstance(node, dsl.Neg):
            return -self.evaluate(node.operand)
        if isinstance(node, (dsl.Scale, dsl.Wedge)):
            return self._multiply(self.evaluate(node.left), self.evaluate(node.right))
        if isinstance(node, dsl.Power):
            return self._power(self.evaluate(node.base), node.exponent)
        if isinstance(node, dsl.Bracket):
            return gbracket(self.evaluate(node.left), self.evaluate(node.right))
        if isinstance(node, dsl.Deriv):
            return exterior_d(self.evaluate(node.operand))
        if isinstance(node, dsl.Curv):
            return curvature(Connection(self.evaluate(node.connection)))
        if isinstance(node, dsl.CovDeriv):
            w = Connection(self.evaluate(node.connection))
            return covariant_d(w, self.evaluate(node.operand))
        if isinstance(node, dsl.Trace):
            return trace(self.evaluate(node.operand))
        if isinstance(node, dsl.Contract):
            return contract(self.evaluate(node.vector), self.evaluate(node.operand))
        raise TypeError(f"nodo desconocido: {type(node).__name__}")

    def compare(self, lhs: dsl.Node, rhs: dsl.Node) -> Comparison:
        """Evalúa ambos lados y los compara hasta el orden válido común."""
        return compare_values(self.evaluate(lhs), self.evaluate(rhs))


def _as_number(value):
    """Enteros y racionales de la torre numérica pasan a Fraction; las formas no cambian."""
    if isinstance(value, numbers.Rational) and not isinstance(value, Fraction):
        return Fraction(value)
    return value


def compare_values(left: Value, right: Value) -> Comparison:
    """
    Igualdad exacta de dos valores; las formas se comparan al orden válido común.

    Un número 0 se compara con cualquier forma como la forma nula.
    """
    left, right = _as_number(left), _as_number(right)
    if isinstance(left, Fraction) and isinstance(right, Fraction):
        diff = left - right
        return Comparison(diff == 0, None, '' if diff == 0 else str(diff))
    if isinstance(right, Fraction) and right == 0:
        diff = left
    elif isinstance(left, Fraction) and left == 0:
        diff = -right
    elif isinstance(left, Fraction) or isinstance(right, Fraction):
        form = right if isinstance(left, Fraction) else left
        number = left if isinstance(left, Fraction) else right
        if not isinstance(form, ScalarForm) or form.degree != 0:
            raise TypeError("a nonzero number can only be compared with a scalar function")
        constant = ScalarForm(0, {(): Jet.constant(number, form.valid_order)}, form.valid_order)
        diff = form - constant if form is left else constant - form
    else:
        diff = left - right
    passed = diff.is_zero()
    return Comparison(passed, diff.valid_order, '' if passed else str(diff))
