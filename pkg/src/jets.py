"""
Módulo de jets: polinomios truncados en las coordenadas de la carta.

Un Jet es un polinomio en (x, y, z) con coeficientes racionales exactos,
truncado por grado total (i + j + k <= cap). Es el anillo escalar sobre el
que se construyen matrices de Lie y formas diferenciales.

Cada Jet lleva su propio ``cap``: las operaciones binarias producen el cap
mínimo y la derivada parcial lo reduce en uno.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

# Configurar logging
logger = logging.getLogger(__name__)

Monomial = Tuple[int, int, int]
Number = Union[int, Fraction]

AXES = ('x', 'y', 'z')


class NotAUnitError(ArithmeticError):
    """El Jet no es invertible (término constante nulo)."""


class DegenerateJetError(ArithmeticError):
    """Se intentó comparar o usar un Jet sin ningún orden confiable."""


def axis_index(axis: Union[str, int]) -> int:
    """Convierte 'x'/'y'/'z' (o 0/1/2) en índice de eje."""
    if isinstance(axis, int):
        if axis not in (0, 1, 2):
            raise ValueError(f"eje inválido: {axis}")
        return axis
    try:
        return AXES.index(axis)
    except ValueError:
        raise ValueError(f"eje inválido: {axis!r}") from None


def _degree(m: Monomial) -> int:
    return m[0] + m[1] + m[2]


class Jet:
    """
    Polinomio truncado en tres variables con coeficientes Fraction.

    Atributos:
        cap (int): Grado total máximo almacenado
        terms (Dict[Monomial, Fraction]): Términos no nulos con grado <= cap
        degenerate (bool): True si el valor no es confiable en ningún orden
    """

    __slots__ = ('cap', 'terms', 'degenerate')

    def __init__(self, terms: Optional[Mapping[Monomial, Number]] = None,
                 cap: int = 4, degenerate: bool = False):
        if cap < 0:
            raise ValueError(f"cap debe ser no negativo: {cap}")
        clean: Dict[Monomial, Fraction] = {}
        for mono, coef in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != 3 or min(mono) < 0:
                raise ValueError(f"multi-índice inválido: {mono}")
            if _degree(mono) > cap:
                continue
            coef = Fraction(coef)
            if coef:
                clean[mono] = clean.get(mono, Fraction(0)) + coef
                if not clean[mono]:
                    del clean[mono]
        self.cap = cap
        self.terms = clean
        self.degenerate = degenerate

    # ------------------------------------------------------------------
    # Constructores
    # ------------------------------------------------------------------

    @classmethod
    def _build(cls, terms: Mapping[Monomial, Fraction], cap: int,
               degenerate: bool = False) -> 'Jet':
        # Uso interno: los coeficientes ya son Fraction.
        obj = cls.__new__(cls)
        obj.cap = cap
        obj.terms = {m: c for m, c in terms.items() if c and _degree(m) <= cap}
        obj.degenerate = degenerate
        return obj

    @classmethod
    def zero(cls, cap: int) -> 'Jet':
        return cls({}, cap)

    @classmethod
    def constant(cls, value: Number, cap: int) -> 'Jet':
        return cls({(0, 0, 0): value}, cap)

    @classmethod
    def coordinate(cls, axis: Union[str, int], cap: int) -> 'Jet':
        """Función coordenada x, y o z."""
        mono = [0, 0, 0]
        mono[axis_index(axis)] = 1
        return cls({tuple(mono): 1}, cap)

    @classmethod
    def monomial(cls, exponents: Monomial, coef: Number = 1, cap: int = 4) -> 'Jet':
        return cls({tuple(exponents): coef}, cap)

    # ------------------------------------------------------------------
    # Propiedades
    # ------------------------------------------------------------------

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0, 0), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, cap: int) -> 'Jet':
        """Trunca a un cap menor o igual (nunca lo eleva)."""
        return Jet(self.terms, min(cap, self.cap), self.degenerate)

    def _coerce(self, other) -> 'Jet':
        if isinstance(other, Jet):
            return other
        if isinstance(other, (int, Fraction)):
            return Jet.constant(other, self.cap)
        return NotImplemented

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return jet_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> 'Jet':
        return Jet._build({m: -c for m, c in self.terms.items()}, self.cap, self.degenerate)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return jet_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return jet_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Jet):
            return NotImplemented
        return jet_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> 'Jet':
        if exponent < 0:
            return jet_inverse(self) ** (-exponent)
        result = Jet.constant(1, self.cap)
        for _ in range(exponent):
            result = jet_mul(result, self)
        return result

    def scale(self, factor: Number) -> 'Jet':
        factor = Fraction(factor)
        return Jet._build({m: c * factor for m, c in self.terms.items()}, self.cap, self.degenerate)

    def partial(self, axis: Union[str, int]) -> 'Jet':
        return jet_partial(self, axis)

    def inverse(self) -> 'Jet':
        return jet_inverse(self)

    def evaluate(self, point: Iterable[Number]) -> Fraction:
        return jet_eval(self, point)

    # ------------------------------------------------------------------
    # Comparación
    # ------------------------------------------------------------------

    def agrees_with(self, other: 'Jet', order: Optional[int] = None) -> bool:
        """
        Compara dos Jets hasta un orden dado.

        Solo se comparan términos de grado total <= min(cap, order).

        Args:
            other (Jet): Jet a comparar
            order (int, optional): Orden máximo; por defecto el cap común

        Returns:
            bool: True si coinciden hasta ese orden
        """
        if self.degenerate or other.degenerate:
            raise DegenerateJetError("comparison with a fully degenerate jet")
        limit = min(self.cap, other.cap)
        if order is not None:
            limit = min(limit, order)
        keys = set(self.terms) | set(other.terms)
        zero = Fraction(0)
        return all(
            self.terms.get(m, zero) == other.terms.get(m, zero)
            for m in keys if _degree(m) <= limit
        )

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Jet({self}, cap={self.cap})"

    def __str__(self) -> str:
        if self.degenerate:
            return "<degenerate>"
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (_degree(m), [-e for e in m])):
            coef = self.terms[mono]
            factors = []
            for name, exp in zip(AXES, mono):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}**{exp}")
            monomial = '*'.join(factors)
            if not monomial:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(monomial)
            elif coef == -1:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{coef}*{monomial}")
        text = ' + '.join(parts)
        return text.replace('+ -', '- ')


# ============================================================================
# OPERACIONES DEL ANILLO
# ============================================================================

def jet_add(a: Jet, b: Jet) -> Jet:
    """Suma término a término truncada a min(cap_a, cap_b)."""
    cap = min(a.cap, b.cap)
    terms = dict(a.terms)
    for mono, coef in b.terms.items():
        terms[mono] = terms.get(mono, Fraction(0)) + coef
    return Jet._build(terms, cap, a.degenerate or b.degenerate)


def jet_mul(a: Jet, b: Jet) -> Jet:
    """Producto de convolución truncado a min(cap_a, cap_b)."""
    cap = min(a.cap, b.cap)
    degenerate = a.degenerate or b.degenerate
    if not a.terms or not b.terms:
        return Jet({}, cap, degenerate)
    right = [(mb, _degree(mb), cb) for mb, cb in b.terms.items()]
    terms: Dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        da = _degree(ma)
        if da > cap:
            continue
        for mb, db, cb in right:
            if da + db > cap:
                continue
            key = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
            terms[key] = terms.get(key, Fraction(0)) + ca * cb
    return Jet._build(terms, cap, degenerate)


def jet_partial(a: Jet, axis: Union[str, int]) -> Jet:
    """
    Derivada parcial formal respecto a un eje.

    La derivada de un truncamiento de orden D solo es confiable hasta D-1;
    con cap 0 el resultado es el Jet cero marcado como degenerado.
    """
    k = axis_index(axis)
    if a.cap == 0:
        logger.debug("⚠ derivada de un Jet con cap 0: resultado degenerado")
        return Jet({}, 0, degenerate=True)
    terms = {}
    for mono, coef in a.terms.items():
        exp = mono[k]
        if exp == 0:
            continue
        lowered = list(mono)
        lowered[k] -= 1
        terms[tuple(lowered)] = coef * exp
    return Jet._build(terms, a.cap - 1, a.degenerate)


def jet_inverse(a: Jet) -> Jet:
    """
    Inverso multiplicativo en el anillo truncado.

    Para a = c + n con c != 0 y n sin término constante, se usa la serie
    geométrica (1/c) * sum_k (-n/c)^k, que termina en k = cap.

    Raises:
        NotAUnitError: Si el término constante es nulo
    """
    c = a.constant_term
    if c == 0:
        raise NotAUnitError("not a unit")
    cap = a.cap
    n = Jet({m: v for m, v in a.terms.items() if m != (0, 0, 0)}, cap)
    ratio = n.scale(-1 / c)
    term = Jet.constant(1, cap)
    total = Jet.constant(1, cap)
    for _ in range(cap):
        term = jet_mul(term, ratio)
        if term.is_zero():
            break
        total = jet_add(total, term)
    return total.scale(1 / c)


def jet_eval(a: Jet, point: Iterable[Number]) -> Fraction:
    """Evalúa el polinomio almacenado en un punto racional (x, y, z)."""
    px, py, pz = (Fraction(v) for v in point)
    total = Fraction(0)
    for (i, j, k), coef in a.terms.items():
        total += coef * px ** i * py ** j * pz ** k
    return total
