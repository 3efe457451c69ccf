"""
Módulo de álgebras de Lie matriciales sobre el anillo de jets.

Proporciona:
- LieAlgebraSpec: realización matricial fija de un álgebra semisimple
  (sl2 en la representación fundamental 2x2, sl3 en 3x3)
- LieMatrix: matriz cuadrada con entradas Jet (función con valores en el álgebra)
- Corchete, forma traza y combinación lineal sobre la base

La traza es la traza matricial de la representación fundamental, no la
forma de Killing.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from .jets import Jet, Number

# Configurar logging
logger = logging.getLogger(__name__)

RationalMatrix = Tuple[Tuple[Fraction, ...], ...]


class SizeMismatchError(ValueError):
    """Tamaños de matriz (o longitudes de coeficientes) incompatibles."""


# ============================================================================
# ÁLGEBRA LINEAL RACIONAL
# ============================================================================

def _rational_matrix(rows: Sequence[Sequence[Number]]) -> RationalMatrix:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def _as_array(rows: Sequence[Sequence]) -> np.ndarray:
    """Arreglo numpy de objetos: conserva Fraction y Jet sin pasar a flotante."""
    return np.array(rows, dtype=object)


def _to_sympy(rows: Sequence[Sequence[Number]]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row]
                         for row in rows])


def _from_sympy(matrix: sympy.Matrix) -> RationalMatrix:
    return tuple(tuple(Fraction(int(v.p), int(v.q)) for v in row) for row in matrix.tolist())


def _rank(vectors: List[List[Fraction]]) -> int:
    return _to_sympy(vectors).rank()


def rational_determinant(matrix: RationalMatrix) -> Fraction:
    """Determinante exacto de una matriz racional."""
    det = _to_sympy(matrix).det()
    return Fraction(int(det.p), int(det.q))


def rational_inverse(matrix: RationalMatrix) -> RationalMatrix:
    """
    Inversa exacta de una matriz racional.

    Raises:
        ArithmeticError: Si la matriz es singular
    """
    m = _to_sympy(matrix)
    if m.det() == 0:
        raise ArithmeticError("singular matrix")
    return _from_sympy(m.inv())


def _commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def _flatten(m: Union[RationalMatrix, np.ndarray]) -> List[Fraction]:
    return [Fraction(v) for v in np.ravel(_as_array(m))]


# ============================================================================
# ESPECIFICACIÓN DEL ÁLGEBRA
# ============================================================================

@dataclass(frozen=True)
class LieAlgebraSpec:
    """
    Realización matricial fija de un álgebra de Lie semisimple.

    Atributos:
        name (str): Identificador ('sl2', 'sl3')
        basis (tuple): Matrices racionales de la base
        basis_names (tuple): Nombres de los elementos de la base en el DSL
        matrix_size (int): Tamaño de las matrices
    """
    name: str
    basis: Tuple[RationalMatrix, ...]
    basis_names: Tuple[str, ...]
    matrix_size: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_element(self, name: str, cap: int) -> 'LieMatrix':
        """Devuelve el elemento de base con nombre dado como LieMatrix constante."""
        try:
            index = self.basis_names.index(name)
        except ValueError:
            raise KeyError(f"'{name}' no es un elemento de base de {self.name}") from None
        return LieMatrix.from_rational(self.basis[index], cap)

    def structure_constants(self) -> Dict[Tuple[int, int], List[Fraction]]:
        """
        Constantes de estructura: [e_a, e_b] = sum_c f_ab^c e_c.

        Raises:
            ValueError: Si algún corchete cae fuera del span de la base
        """
        arrays = [_as_array(m) for m in self.basis]
        constants = {}
        for a, b in product(range(self.dim), repeat=2):
            target = _flatten(_commutator(arrays[a], arrays[b]))
            constants[(a, b)] = self._solve_in_span(target)
        return constants

    def _solve_in_span(self, target: List[Fraction]) -> List[Fraction]:
        # Columnas = elementos de base aplanados.
        system = _to_sympy([_flatten(m) for m in self.basis]).T
        try:
            solution, free = system.gauss_jordan_solve(_to_sympy([[v] for v in target]))
        except ValueError:
            raise ValueError(f"el corchete no cierra en la base de {self.name}") from None
        solution = solution.subs({symbol: 0 for symbol in free})
        return [Fraction(int(v.p), int(v.q)) for v in solution]

    def validate(self) -> Dict[str, bool]:
        """
        Verifica independencia lineal, clausura y Jacobi sobre la base.

        Returns:
            Dict[str, bool]: Resultado de cada verificación
        """
        results = {
            'independent': _rank([_flatten(m) for m in self.basis]) == self.dim,
            'closed': True,
            'jacobi': True,
        }
        try:
            self.structure_constants()
        except ValueError:
            results['closed'] = False
        arrays = [_as_array(m) for m in self.basis]
        for x, y, z in product(arrays, repeat=3):
            total = (_commutator(x, _commutator(y, z)) + _commutator(y, _commutator(z, x))
                     + _commutator(z, _commutator(x, y)))
            if any(v != 0 for v in np.ravel(total)):
                results['jacobi'] = False
                break
        if all(results.values()):
            logger.debug(f"✓ Álgebra {self.name} validada (dim={self.dim})")
        else:
            logger.warning(f"⚠ Álgebra {self.name} no supera la validación: {results}")
        return results


def _unit(n: int, i: int, j: int) -> RationalMatrix:
    return _rational_matrix([[int(r == i and c == j) for c in range(n)] for r in range(n)])


SL2 = LieAlgebraSpec(
    name='sl2',
    basis=(
        _rational_matrix([[0, 1], [0, 0]]),
        _rational_matrix([[0, 0], [1, 0]]),
        _rational_matrix([[1, 0], [0, -1]]),
    ),
    basis_names=('E', 'F_', 'H'),
    matrix_size=2,
)

SL3 = LieAlgebraSpec(
    name='sl3',
    basis=(
        _unit(3, 0, 1), _unit(3, 0, 2), _unit(3, 1, 2),
        _unit(3, 1, 0), _unit(3, 2, 0), _unit(3, 2, 1),
        _rational_matrix([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
        _rational_matrix([[0, 0, 0], [0, 1, 0], [0, 0, -1]]),
    ),
    basis_names=('E12', 'E13', 'E23', 'F12', 'F13', 'F23', 'H1', 'H2'),
    matrix_size=3,
)

ALGEBRAS: Dict[str, LieAlgebraSpec] = {'sl2': SL2, 'sl3': SL3}


def get_algebra(name: str) -> LieAlgebraSpec:
    """Busca un álgebra incorporada por nombre ('sl2' o 'sl3')."""
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise KeyError(f"álgebra desconocida: {name!r} (opciones: {', '.join(ALGEBRAS)})") from None


# ============================================================================
# MATRICES CON ENTRADAS JET
# ============================================================================

class LieMatrix:
    """
    Matriz cuadrada con entradas Jet que comparten un cap común.

    Atributos:
        size (int): Tamaño de la matriz
        entries (tuple): Filas de Jets
        cap (int): Cap común (mínimo de las entradas al construir)
    """

    __slots__ = ('size', 'entries', 'cap')

    def __init__(self, entries: Sequence[Sequence[Jet]]):
        size = len(entries)
        if size == 0 or any(len(row) != size for row in entries):
            raise SizeMismatchError("LieMatrix requiere una matriz cuadrada no vacía")
        cap = min(e.cap for row in entries for e in row)
        self.size = size
        self.cap = cap
        self.entries = tuple(
            tuple(e if e.cap == cap else e.truncate(cap) for e in row) for row in entries
        )

    @classmethod
    def zero(cls, size: int, cap: int) -> 'LieMatrix':
        return cls([[Jet.zero(cap) for _ in range(size)] for _ in range(size)])

    @classmethod
    def identity(cls, size: int, cap: int) -> 'LieMatrix':
        return cls([[Jet.constant(int(i == j), cap) for j in range(size)] for i in range(size)])

    @classmethod
    def from_rational(cls, matrix: Sequence[Sequence[Number]], cap: int) -> 'LieMatrix':
        return cls([[Jet.constant(v, cap) for v in row] for row in matrix])

    def _check(self, other: 'LieMatrix') -> None:
        if self.size != other.size:
            raise SizeMismatchError(f"size mismatch: {self.size} vs {other.size}")

    def _map(self, fn) -> 'LieMatrix':
        return LieMatrix([[fn(e) for e in row] for row in self.entries])

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def __add__(self, other: 'LieMatrix') -> 'LieMatrix':
        if not isinstance(other, LieMatrix):
            return NotImplemented
        self._check(other)
        return LieMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: 'LieMatrix') -> 'LieMatrix':
        if not isinstance(other, LieMatrix):
            return NotImplemented
        self._check(other)
        return LieMatrix([[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> 'LieMatrix':
        return self._map(lambda e: -e)

    def __mul__(self, other):
        """Producto matricial (LieMatrix), por Jet o por escalar racional."""
        if isinstance(other, LieMatrix):
            self._check(other)
            return LieMatrix((_as_array(self.entries) @ _as_array(other.entries)).tolist())
        if isinstance(other, (Jet, int, Fraction)):
            return self._map(lambda e: e * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Jet, int, Fraction)):
            return self._map(lambda e: other * e if isinstance(other, Jet) else e * other)
        return NotImplemented

    def scale(self, factor: Number) -> 'LieMatrix':
        return self._map(lambda e: e.scale(factor))

    def partial(self, axis) -> 'LieMatrix':
        return self._map(lambda e: e.partial(axis))

    def trace(self) -> Jet:
        return np.trace(_as_array(self.entries))

    def inverse(self) -> 'LieMatrix':
        """
        Inversa en el anillo truncado.

        Con M = M0 + N (M0 constante invertible, N sin término constante):
        M^-1 = sum_k (-M0^-1 N)^k M0^-1, serie que termina en k = cap.
        """
        m0 = tuple(tuple(e.constant_term for e in row) for row in self.entries)
        m0_inv = LieMatrix.from_rational(rational_inverse(m0), self.cap)
        nilpotent = self - LieMatrix.from_rational(m0, self.cap)
        ratio = -(m0_inv * nilpotent)
        term = LieMatrix.identity(self.size, self.cap)
        total = term
        for _ in range(self.cap):
            term = term * ratio
            if term.is_zero():
                break
            total = total + term
        return total * m0_inv

    def evaluate(self, point) -> RationalMatrix:
        return tuple(tuple(e.evaluate(point) for e in row) for row in self.entries)

    def truncate(self, cap: int) -> 'LieMatrix':
        return self._map(lambda e: e.truncate(cap))

    # ------------------------------------------------------------------
    # Comparación
    # ------------------------------------------------------------------

    def is_zero(self, order: Optional[int] = None) -> bool:
        limit = self.cap if order is None else min(order, self.cap)
        return all(e.truncate(limit).is_zero() for row in self.entries for e in row)

    def agrees_with(self, other: 'LieMatrix', order: Optional[int] = None) -> bool:
        self._check(other)
        return all(a.agrees_with(b, order)
                   for r1, r2 in zip(self.entries, other.entries)
                   for a, b in zip(r1, r2))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieMatrix):
            return NotImplemented
        return self.size == other.size and self.agrees_with(other)

    __hash__ = None

    def __repr__(self) -> str:
        rows = ', '.join('[' + ', '.join(str(e) for e in row) + ']' for row in self.entries)
        return f"LieMatrix([{rows}], cap={self.cap})"


# ============================================================================
# OPERACIONES DEL ÁLGEBRA
# ============================================================================

def bracket(X: LieMatrix, Y: LieMatrix) -> LieMatrix:
    """Corchete puntual [X, Y] = XY - YX."""
    X._check(Y)
    return X * Y - Y * X


def trace_form(X: LieMatrix, Y: LieMatrix) -> Jet:
    """Forma traza tr(XY) de la representación fundamental."""
    X._check(Y)
    return (X * Y).trace()


def from_coefficients(spec: LieAlgebraSpec, coeffs: Sequence[Union[Jet, Number]],
                      cap: Optional[int] = None) -> LieMatrix:
    """
    Combinación lineal sum_a coeffs[a] * basis[a].

    Args:
        spec (LieAlgebraSpec): Álgebra de referencia
        coeffs (Sequence): Coeficientes Jet (o racionales) en el orden de la base
        cap (int, optional): Cap para coeficientes racionales (por defecto 4)

    Returns:
        LieMatrix: Elemento del álgebra

    Raises:
        SizeMismatchError: Si len(coeffs) != spec.dim
    """
    if len(coeffs) != spec.dim:
        raise SizeMismatchError(
            f"se esperaban {spec.dim} coeficientes para {spec.name}, se recibieron {len(coeffs)}")
    jet_caps = [c.cap for c in coeffs if isinstance(c, Jet)]
    base_cap = cap if cap is not None else (min(jet_caps) if jet_caps else 4)
    jets = [c if isinstance(c, Jet) else Jet.constant(c, base_cap) for c in coeffs]
    n = spec.matrix_size
    rows = [[Jet.zero(base_cap) for _ in range(n)] for _ in range(n)]
    for coef, basis in zip(jets, spec.basis):
        for i in range(n):
            for j in range(n):
                if basis[i][j]:
                    rows[i][j] = rows[i][j] + coef.scale(basis[i][j])
    return LieMatrix(rows)
