"""
Módulo de formas diferenciales graduadas sobre la carta 3-dimensional.

Las formas se guardan sobre la base ordenada de covectores
(1; dx, dy, dz; dx^dy, dx^dz, dy^dz; dx^dy^dz) con dx < dy < dz.
Los coeficientes son LieMatrix (GForm, valores en el álgebra) o Jet
(ScalarForm, cantidades trazadas como Q, CS o U).

Cada forma lleva ``valid_order``: el orden de jet hasta el que es
confiable. La derivada exterior lo reduce en uno y toda comparación se
hace solo hasta el orden válido común.

Operaciones: wedge, corchete graduado, derivada exterior, traza,
contracción con un campo vectorial y combinación lineal.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from .jets import AXES, Jet, Number, axis_index
from .liealg import LieMatrix, SizeMismatchError

# Configurar logging
logger = logging.getLogger(__name__)

Covector = Tuple[int, ...]
Coefficient = Union[LieMatrix, Jet]

MAX_DEGREE = 3

BASIS_BY_DEGREE: Dict[int, Tuple[Covector, ...]] = {
    0: ((),),
    1: ((0,), (1,), (2,)),
    2: ((0, 1), (0, 2), (1, 2)),
    3: ((0, 1, 2),),
}


class DegreeError(ValueError):
    """Grado de forma inválido o incompatible para la operación."""


class DegenerateOrderError(ArithmeticError):
    """La forma no tiene orden válido suficiente para derivar."""


def covector_name(key: Covector) -> str:
    """Nombre de un covector básico: () -> '1', (0, 1) -> 'dx^dy'."""
    if not key:
        return '1'
    return '^'.join(f"d{AXES[i]}" for i in key)


def covector_key(name: str) -> Covector:
    """Inverso de covector_name; acepta 'dx^dy', 'dx∧dy' o '1'."""
    name = name.replace('∧', '^').replace(' ', '')
    if name in ('', '1'):
        return ()
    parts = name.split('^')
    key = []
    for part in parts:
        if len(part) != 2 or part[0] != 'd':
            raise DegreeError(f"covector inválido: {name!r}")
        key.append(axis_index(part[1]))
    sign, ordered = _sort_with_sign(key)
    if sign == 0 or sign < 0:
        raise DegreeError(f"covector fuera de orden canónico: {name!r}")
    return ordered


def _sort_with_sign(indices) -> Tuple[int, Covector]:
    """Ordena índices de covectores devolviendo el signo de la permutación (0 si se repiten)."""
    items = list(indices)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


def _coef_is_zero(coef: Coefficient, order: Optional[int]) -> bool:
    if isinstance(coef, LieMatrix):
        return coef.is_zero(order)
    limit = coef.cap if order is None else min(order, coef.cap)
    return coef.truncate(limit).is_zero()


def _coef_exactly_zero(coef: Coefficient) -> bool:
    return _coef_is_zero(coef, None)


# ============================================================================
# FORMAS
# ============================================================================

class _Form:
    """Base común de GForm y ScalarForm (álgebra lineal, comparación, impresión)."""

    __slots__ = ('degree', 'components', 'valid_order')

    def __init__(self, degree: int, components: Optional[Mapping[Covector, Coefficient]] = None,
                 valid_order: Optional[int] = None):
        if degree < 0:
            raise DegreeError(f"grado negativo: {degree}")
        comps = {}
        for key, coef in (components or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise DegreeError(f"componente {covector_name(key)} no tiene grado {degree}")
            if key not in BASIS_BY_DEGREE.get(degree, ()):
                raise DegreeError(f"componente fuera de la base ordenada: {key}")
            self._check_coefficient(coef)
            if not _coef_exactly_zero(coef):
                comps[key] = coef
        caps = [c.cap for c in comps.values()]
        if valid_order is None:
            if not caps:
                raise DegreeError("una forma vacía necesita valid_order explícito")
            valid_order = min(caps)
        elif caps:
            valid_order = min(valid_order, min(caps))
        self.degree = degree
        self.components = comps
        self.valid_order = valid_order

    def _check_coefficient(self, coef) -> None:
        raise NotImplementedError

    def _rebuild(self, degree: int, components, valid_order: int) -> '_Form':
        raise NotImplementedError

    # ------------------------------------------------------------------
    # Álgebra lineal
    # ------------------------------------------------------------------

    def _check_same_kind(self, other: '_Form') -> None:
        if type(self) is not type(other):
            raise DegreeError(f"no se pueden sumar {type(self).__name__} y {type(other).__name__}")
        if self.degree != other.degree:
            raise DegreeError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: '_Form') -> '_Form':
        if not isinstance(other, _Form):
            return NotImplemented
        self._check_same_kind(other)
        comps = dict(self.components)
        for key, coef in other.components.items():
            comps[key] = comps[key] + coef if key in comps else coef
        return self._rebuild(self.degree, comps, min(self.valid_order, other.valid_order))

    def __neg__(self) -> '_Form':
        return self._rebuild(self.degree, {k: -c for k, c in self.components.items()},
                             self.valid_order)

    def __sub__(self, other: '_Form') -> '_Form':
        if not isinstance(other, _Form):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Number) -> '_Form':
        factor = Fraction(factor)
        return self._rebuild(self.degree, {k: c.scale(factor) for k, c in self.components.items()},
                             self.valid_order)

    def __rmul__(self, factor):
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    def component(self, key: Union[Covector, str]) -> Optional[Coefficient]:
        """Coeficiente de un covector (None si es cero)."""
        if isinstance(key, str):
            key = covector_key(key)
        return self.components.get(tuple(key))

    def items(self) -> Iterator[Tuple[Covector, Coefficient]]:
        for key in BASIS_BY_DEGREE.get(self.degree, ()):
            if key in self.components:
                yield key, self.components[key]

    def wedge(self, other: '_Form') -> '_Form':
        return wedge(self, other)

    def d(self) -> '_Form':
        return exterior_d(self)

    # ------------------------------------------------------------------
    # Comparación hasta el orden válido
    # ------------------------------------------------------------------

    def is_zero(self, order: Optional[int] = None) -> bool:
        limit = self.valid_order if order is None else min(order, self.valid_order)
        return all(_coef_is_zero(c, limit) for c in self.components.values())

    def agrees_with(self, other: '_Form', order: Optional[int] = None) -> bool:
        """
        Igualdad hasta el orden válido común (o un orden menor dado).

        Args:
            other (_Form): Forma a comparar (mismo tipo y grado)
            order (int, optional): Orden máximo de comparación

        Returns:
            bool: True si coinciden hasta ese orden
        """
        if type(self) is not type(other) or self.degree != other.degree:
            return False
        limit = min(self.valid_order, other.valid_order)
        if order is not None:
            limit = min(limit, order)
        if limit < 0:
            raise DegenerateOrderError("comparison below order 0")
        return (self - other).is_zero(limit)

    def __eq__(self, other) -> bool:
        if not isinstance(other, _Form):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None

    def _format_coefficient(self, coef: Coefficient) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        parts = []
        for key, coef in self.items():
            text = self._format_coefficient(coef)
            parts.append(text if not key else f"{text} {covector_name(key)}")
        if not parts:
            return '0'
        return ' + '.join(parts).replace('+ -', '- ')


class GForm(_Form):
    """
    Forma graduada con valores en el álgebra de Lie (coeficientes LieMatrix).

    Atributos:
        degree (int): Grado (0..3; grados mayores solo como forma nula)
        components (dict): Covector ordenado -> LieMatrix
        valid_order (int): Orden de jet confiable
        size (int): Tamaño de matriz
    """

    __slots__ = ('size',)

    def __init__(self, degree: int, components: Optional[Mapping[Covector, LieMatrix]] = None,
                 valid_order: Optional[int] = None, size: Optional[int] = None):
        sizes = {c.size for c in (components or {}).values()}
        if len(sizes) > 1:
            raise SizeMismatchError(f"size mismatch: componentes de tamaños {sorted(sizes)}")
        if size is None:
            if not sizes:
                raise SizeMismatchError("una GForm vacía necesita size explícito")
            size = sizes.pop()
        elif sizes and sizes != {size}:
            raise SizeMismatchError(f"size mismatch: {sizes.pop()} vs {size}")
        self.size = size
        super().__init__(degree, components, valid_order)

    @classmethod
    def zero(cls, degree: int, size: int, valid_order: int) -> 'GForm':
        return cls(degree, {}, valid_order, size)

    @classmethod
    def from_named(cls, components: Mapping[str, LieMatrix],
                   valid_order: Optional[int] = None, size: Optional[int] = None) -> 'GForm':
        """Construye desde nombres de covector: {'dx': E, 'dy': F}."""
        keyed = {covector_key(name): coef for name, coef in components.items()}
        degrees = {len(k) for k in keyed}
        if len(degrees) != 1:
            raise DegreeError("los componentes deben tener un único grado")
        return cls(degrees.pop(), keyed, valid_order, size)

    @classmethod
    def from_matrix(cls, matrix: LieMatrix) -> 'GForm':
        """Forma de grado 0 con un único coeficiente matricial."""
        return cls(0, {(): matrix}, matrix.cap, matrix.size)

    def _check_coefficient(self, coef) -> None:
        if not isinstance(coef, LieMatrix):
            raise TypeError(f"GForm requiere coeficientes LieMatrix, no {type(coef).__name__}")

    def _rebuild(self, degree, components, valid_order) -> 'GForm':
        return GForm(degree, components, valid_order, self.size)

    def _check_same_kind(self, other) -> None:
        super()._check_same_kind(other)
        if self.size != other.size:
            raise SizeMismatchError(f"size mismatch: {self.size} vs {other.size}")

    def _format_coefficient(self, coef: LieMatrix) -> str:
        return '[' + ', '.join('[' + ', '.join(str(e) for e in row) + ']'
                               for row in coef.entries) + ']'

    def __repr__(self) -> str:
        return f"GForm(degree={self.degree}, valid_order={self.valid_order}, {self})"


class ScalarForm(_Form):
    """Forma graduada con coeficientes Jet (cantidades trazadas Q, CS, U)."""

    __slots__ = ()

    @classmethod
    def zero(cls, degree: int, valid_order: int) -> 'ScalarForm':
        return cls(degree, {}, valid_order)

    @classmethod
    def from_named(cls, components: Mapping[str, Union[Jet, Number]],
                   valid_order: Optional[int] = None, cap: int = 4) -> 'ScalarForm':
        """Construye desde nombres de covector: {'dx^dy^dz': 4}."""
        keyed = {}
        for name, coef in components.items():
            keyed[covector_key(name)] = coef if isinstance(coef, Jet) else Jet.constant(coef, cap)
        degrees = {len(k) for k in keyed}
        if len(degrees) != 1:
            raise DegreeError("los componentes deben tener un único grado")
        return cls(degrees.pop(), keyed, valid_order if valid_order is not None else cap)

    def _check_coefficient(self, coef) -> None:
        if not isinstance(coef, Jet):
            raise TypeError(f"ScalarForm requiere coeficientes Jet, no {type(coef).__name__}")

    def _rebuild(self, degree, components, valid_order) -> 'ScalarForm':
        return ScalarForm(degree, components, valid_order)

    def _format_coefficient(self, coef: Jet) -> str:
        text = str(coef.truncate(self.valid_order))
        if len(coef.truncate(self.valid_order).terms) > 1:
            return f"({text})"
        return text

    def __str__(self) -> str:
        parts = []
        for key, coef in self.items():
            trusted = coef.truncate(self.valid_order)
            if trusted.is_zero():
                continue
            text = self._format_coefficient(coef)
            parts.append(text if not key else f"{text} {covector_name(key)}")
        if not parts:
            return '0'
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self) -> str:
        return f"ScalarForm(degree={self.degree}, valid_order={self.valid_order}, {self})"


@dataclass(frozen=True)
class VectorFieldSym:
    """
    Campo vectorial xi = xi^x d/dx + xi^y d/dy + xi^z d/dz con componentes Jet.

    Atributos:
        components (tuple): (xi^x, xi^y, xi^z)
    """
    components: Tuple[Jet, Jet, Jet]

    def __post_init__(self):
        if len(self.components) != 3:
            raise ValueError("un campo vectorial tiene exactamente tres componentes")
        cap = min(c.cap for c in self.components)
        object.__setattr__(self, 'components', tuple(c.truncate(cap) for c in self.components))

    @property
    def cap(self) -> int:
        return self.components[0].cap

    @classmethod
    def coordinate_field(cls, axis, cap: int) -> 'VectorFieldSym':
        """Campo coordenado d/dx, d/dy o d/dz."""
        k = axis_index(axis)
        return cls(tuple(Jet.constant(int(i == k), cap) for i in range(3)))

    @classmethod
    def zero(cls, cap: int) -> 'VectorFieldSym':
        return cls((Jet.zero(cap), Jet.zero(cap), Jet.zero(cap)))


# ============================================================================
# OPERACIONES
# ============================================================================

def _result_form(degree: int, components, valid_order: int, *operands: _Form) -> _Form:
    sizes = [op.size for op in operands if isinstance(op, GForm)]
    if sizes:
        if len(set(sizes)) > 1:
            raise SizeMismatchError(f"size mismatch: {sizes[0]} vs {sizes[1]}")
        return GForm(degree, components, valid_order, sizes[0])
    return ScalarForm(degree, components, valid_order)


def wedge(A: _Form, B: _Form) -> _Form:
    """
    Producto exterior con multiplicación matricial de coeficientes.

    El grado resultante es deg A + deg B; por encima de 3 la forma es nula.
    Una ScalarForm multiplicada por una GForm produce una GForm.
    """
    degree = A.degree + B.degree
    valid_order = min(A.valid_order, B.valid_order)
    comps: Dict[Covector, Coefficient] = {}
    if degree <= MAX_DEGREE:
        for ka, ca in A.components.items():
            for kb, cb in B.components.items():
                sign, key = _sort_with_sign(ka + kb)
                if sign == 0:
                    continue
                term = ca * cb
                if sign < 0:
                    term = -term
                comps[key] = comps[key] + term if key in comps else term
    return _result_form(degree, comps, valid_order, A, B)


def gbracket(A: _Form, B: _Form) -> _Form:
    """Corchete graduado [A, B] = A^B - (-1)^(pq) B^A."""
    sign = -1 if (A.degree * B.degree) % 2 else 1
    return wedge(A, B) - wedge(B, A).scale(sign)


def exterior_d(A: _Form) -> _Form:
    """
    Derivada exterior componente a componente.

    d(a dx^I) = sum_k d_k a dx^k ^ dx^I, con el signo de reordenar dx^k.

    Raises:
        DegenerateOrderError: Si valid_order es 0
    """
    if A.valid_order < 1:
        raise DegenerateOrderError(
            f"degenerate order: cannot differentiate a form with valid_order {A.valid_order}")
    degree = A.degree + 1
    comps: Dict[Covector, Coefficient] = {}
    if degree <= MAX_DEGREE:
        for key, coef in A.components.items():
            for k in range(3):
                if k in key:
                    continue
                sign = -1 if sum(1 for i in key if i < k) % 2 else 1
                new_key = tuple(sorted(key + (k,)))
                term = coef.partial(k)
                if sign < 0:
                    term = -term
                comps[new_key] = comps[new_key] + term if new_key in comps else term
    return _result_form(degree, comps, A.valid_order - 1, A)


def trace(A: _Form) -> ScalarForm:
    """Traza matricial componente a componente (identidad sobre ScalarForm)."""
    if isinstance(A, ScalarForm):
        return A
    return ScalarForm(A.degree, {k: c.trace() for k, c in A.components.items()}, A.valid_order)


def contract(xi: VectorFieldSym, A: _Form) -> _Form:
    """
    Producto interior i_xi como antiderivación.

    Convención: i_xi(dx^dy) = xi^x dy - xi^y dx (se contrae la primera
    ranura con signo +).

    Raises:
        DegreeError: Si A tiene grado 0
    """
    if A.degree == 0:
        raise DegreeError("contraction of a degree-0 form")
    comps: Dict[Covector, Coefficient] = {}
    for key, coef in A.components.items():
        for position, axis in enumerate(key):
            rest = key[:position] + key[position + 1:]
            term = coef * xi.components[axis]
            if position % 2:
                term = -term
            comps[rest] = comps[rest] + term if rest in comps else term
    return _result_form(A.degree - 1, comps, min(A.valid_order, xi.cap), A)


def scale_add(c1: Number, A: _Form, c2: Number, B: _Form) -> _Form:
    """Combinación lineal c1*A + c2*B (mismo grado y tamaño)."""
    if A.degree != B.degree:
        raise DegreeError(f"degree mismatch: {A.degree} vs {B.degree}")
    return A.scale(c1) + B.scale(c2)
