"""
Módulo del álgebra diferencial graduada libre (backend simbólico).

Prueba identidades de forma universal, sin instancias concretas:
- Letras: a (alpha), chi, w0, w1, wt y sus imágenes d(.) como símbolos primitivos
- WordPoly: combinación racional de palabras (formas con valores matriciales)
- TWPolynomial: combinación racional de trazas en forma canónica cíclica graduada
- expand: AST del DSL -> forma normal; verify_identity: PASS si lhs - rhs es vacío

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from . import dsl

# Configurar logging
logger = logging.getLogger(__name__)

Word = Tuple[str, ...]


class SymbolicUnsupportedError(ValueError):
    """La expresión usa construcciones que solo existen en el backend de instancias."""


# ============================================================================
# LETRAS
# ============================================================================

@dataclass(frozen=True)
class GSymbol:
    """
    Generador del álgebra libre.

    Atributos:
        name (str): Nombre de la letra (a, chi, w0, ..., dw0)
        degree (int): Grado de forma
        is_d_image (bool): True para d(.) de un generador; su propia d es cero
        rank (int): Posición en el orden lexicográfico fijo
    """
    name: str
    degree: int
    is_d_image: bool
    rank: int


# Primitivos antes que imágenes d: a < chi < w0 < w1 < wt < da < dchi < dw0 < dw1 < dwt
_PRIMITIVES = (('a', 1), ('chi', 0), ('w0', 1), ('w1', 1), ('wt', 1))

LETTERS: Dict[str, GSymbol] = {}
for _rank, (_name, _deg) in enumerate(_PRIMITIVES):
    LETTERS[_name] = GSymbol(_name, _deg, False, _rank)
for _rank, (_name, _deg) in enumerate(_PRIMITIVES, start=len(_PRIMITIVES)):
    LETTERS['d' + _name] = GSymbol('d' + _name, _deg + 1, True, _rank)

D_IMAGE = {name: 'd' + name for name, _ in _PRIMITIVES}


def _word_degree(word: Word) -> int:
    return sum(LETTERS[name].degree for name in word)


def _word_key(word: Word) -> Tuple[int, ...]:
    return tuple(LETTERS[name].rank for name in word)


def _letter_text(name: str) -> str:
    sym = LETTERS[name]
    return f"d({name[1:]})" if sym.is_d_image else name


def _word_text(word: Word) -> str:
    return ' ^ '.join(_letter_text(n) for n in word) if word else 'I'


def _format_term(coef: Fraction, body: str, first: bool) -> str:
    sign = '-' if coef < 0 else '+'
    magnitude = abs(coef)
    text = body if magnitude == 1 else f"{magnitude}*{body}"
    if first:
        return f"-{text}" if sign == '-' else text
    return f" {sign} {text}"


def _d_word(word: Word) -> Dict[Word, int]:
    """Leibniz graduado: d(l1...ln) = sum (-1)^{|l1...l(k-1)|} l1..d(lk)..ln."""
    out: Dict[Word, int] = defaultdict(int)
    passed = 0
    for k, name in enumerate(word):
        sym = LETTERS[name]
        if not sym.is_d_image:
            new = word[:k] + (D_IMAGE[name],) + word[k + 1:]
            out[new] += -1 if passed % 2 else 1
        passed += sym.degree
    return out


# ============================================================================
# POLINOMIOS DE PALABRAS (sin traza)
# ============================================================================

class WordPoly:
    """
    Combinación racional homogénea de palabras en las letras.

    Atributos:
        degree (int): Grado total de cada palabra
        terms (Dict[Word, Fraction]): Sin coeficientes nulos
    """

    __slots__ = ('degree', 'terms')

    def __init__(self, degree: int, terms: Optional[Mapping[Word, Fraction]] = None):
        self.degree = degree
        self.terms: Dict[Word, Fraction] = {}
        for word, coef in (terms or {}).items():
            coef = Fraction(coef)
            if coef == 0:
                continue
            if _word_degree(word) != degree:
                raise ValueError(f"la palabra {word} no tiene grado {degree}")
            self.terms[word] = coef

    @classmethod
    def letter(cls, name: str) -> 'WordPoly':
        return cls(LETTERS[name].degree, {(name,): Fraction(1)})

    @classmethod
    def identity(cls) -> 'WordPoly':
        return cls(0, {(): Fraction(1)})

    @classmethod
    def zero(cls, degree: int) -> 'WordPoly':
        return cls(degree)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: 'WordPoly') -> None:
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: 'WordPoly') -> 'WordPoly':
        self._check(other)
        out = defaultdict(Fraction, self.terms)
        for word, coef in other.terms.items():
            out[word] += coef
        return WordPoly(self.degree if self.terms else other.degree, out)

    def __neg__(self) -> 'WordPoly':
        return self.scale(-1)

    def __sub__(self, other: 'WordPoly') -> 'WordPoly':
        return self + (-other)

    def scale(self, factor) -> 'WordPoly':
        factor = Fraction(factor)
        return WordPoly(self.degree, {w: c * factor for w, c in self.terms.items()})

    def __mul__(self, other: 'WordPoly') -> 'WordPoly':
        """Producto libre (concatenación de palabras)."""
        out = defaultdict(Fraction)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out[w1 + w2] += c1 * c2
        return WordPoly(self.degree + other.degree, out)

    def d(self) -> 'WordPoly':
        out = defaultdict(Fraction)
        for word, coef in self.terms.items():
            for new, sign in _d_word(word).items():
                out[new] += sign * coef
        return WordPoly(self.degree + 1, out)

    def bracket(self, other: 'WordPoly') -> 'WordPoly':
        """[A, B] = AB - (-1)^{|A||B|} BA."""
        sign = -1 if (self.degree * other.degree) % 2 else 1
        return self * other - (other * self).scale(sign)

    def trace(self) -> 'TWPolynomial':
        return TWPolynomial.from_words(self.degree, self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordPoly):
            return NotImplemented
        return self.terms == other.terms and (not self.terms or self.degree == other.degree)

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        ordered = sorted(self.terms.items(), key=lambda item: _word_key(item[0]))
        return ''.join(_format_term(c, _word_text(w), i == 0) for i, (w, c) in enumerate(ordered))

    def __repr__(self) -> str:
        return f"WordPoly({self})"


# ============================================================================
# TRAZAS EN FORMA CANÓNICA
# ============================================================================

@dataclass(frozen=True, order=False)
class TraceWord:
    """Palabra trazada en forma canónica cíclica graduada."""
    letters: Word

    @property
    def degree(self) -> int:
        return _word_degree(self.letters)

    def sort_key(self) -> Tuple[int, ...]:
        return _word_key(self.letters)

    def __str__(self) -> str:
        return f"tr({_word_text(self.letters)})"


def cyclic_normalize(letters: Iterable[str]) -> Tuple[Optional[TraceWord], int]:
    """
    Forma canónica de tr(w) bajo tr(PR) = (-1)^{|P||R|} tr(RP).

    Se elige la rotación lexicográficamente mínima (según el orden de letras)
    y se acumula el signo. Si la rotación mínima se alcanza con signos
    distintos, la traza es cero.

    Args:
        letters (Iterable[str]): Palabra cruda

    Returns:
        Tuple[Optional[TraceWord], int]: (palabra canónica, signo) con
            tr(letters) = signo * tr(canónica); (None, 0) si la traza se anula
    """
    word = tuple(letters)
    if not word:
        return TraceWord(()), 1
    total = _word_degree(word)
    best_key = None
    best_word: Word = ()
    signs = set()
    prefix = 0
    for k in range(len(word)):
        rotation = word[k:] + word[:k]
        sign = -1 if (prefix * (total - prefix)) % 2 else 1
        key = _word_key(rotation)
        if best_key is None or key < best_key:
            best_key, best_word, signs = key, rotation, {sign}
        elif key == best_key:
            signs.add(sign)
        prefix += LETTERS[word[k]].degree
    if len(signs) > 1:
        return None, 0
    return TraceWord(best_word), signs.pop()


class TWPolynomial:
    """
    Combinación racional de TraceWord canónicas.

    La identidad se cumple si y solo si el polinomio es vacío.
    """

    __slots__ = ('degree', 'terms')

    def __init__(self, degree: int, terms: Optional[Mapping[TraceWord, Fraction]] = None):
        self.degree = degree
        self.terms: Dict[TraceWord, Fraction] = {
            tw: Fraction(c) for tw, c in (terms or {}).items() if c != 0}

    @classmethod
    def from_words(cls, degree: int, words: Mapping[Word, Fraction]) -> 'TWPolynomial':
        """Traza de una combinación de palabras crudas, canonizando cada una."""
        out = defaultdict(Fraction)
        for word, coef in words.items():
            canonical, sign = cyclic_normalize(word)
            if canonical is not None:
                out[canonical] += sign * Fraction(coef)
        return cls(degree, out)

    @classmethod
    def zero(cls, degree: int) -> 'TWPolynomial':
        return cls(degree)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: 'TWPolynomial') -> 'TWPolynomial':
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        out = defaultdict(Fraction, self.terms)
        for tw, coef in other.terms.items():
            out[tw] += coef
        return TWPolynomial(self.degree if self.terms else other.degree, out)

    def __neg__(self) -> 'TWPolynomial':
        return self.scale(-1)

    def __sub__(self, other: 'TWPolynomial') -> 'TWPolynomial':
        return self + (-other)

    def scale(self, factor) -> 'TWPolynomial':
        factor = Fraction(factor)
        return TWPolynomial(self.degree, {tw: c * factor for tw, c in self.terms.items()})

    def normalize(self) -> 'TWPolynomial':
        """Vuelve a canonizar cada palabra (idempotente sobre formas normales)."""
        return TWPolynomial.from_words(self.degree, {tw.letters: c for tw, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TWPolynomial):
            return NotImplemented
        return self.terms == other.terms and (not self.terms or self.degree == other.degree)

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        ordered = sorted(self.terms.items(), key=lambda item: item[0].sort_key())
        return ''.join(_format_term(c, str(tw), i == 0) for i, (tw, c) in enumerate(ordered))

    def __repr__(self) -> str:
        return f"TWPolynomial({self})"


def apply_d(p: TWPolynomial) -> TWPolynomial:
    """
    d a través de la traza con Leibniz graduado; d de una imagen d es cero.

    Args:
        p (TWPolynomial): Polinomio de trazas

    Returns:
        TWPolynomial: d p en forma canónica
    """
    out = defaultdict(Fraction)
    for tw, coef in p.terms.items():
        for word, sign in _d_word(tw.letters).items():
            out[word] += sign * coef
    return TWPolynomial.from_words(p.degree + 1, out)


# ============================================================================
# EXPANSIÓN DE AST
# ============================================================================

SymValue = Union[Fraction, WordPoly, TWPolynomial]


class _Expander:
    """Recorre el AST produciendo números, WordPoly o TWPolynomial."""

    def __init__(self, t: Optional[Fraction], eliminate: bool):
        self.t = None if t is None else Fraction(t)
        self.eliminate = eliminate

    def _unsupported(self, node: dsl.Node, what: str):
        line, column = node.pos
        raise SymbolicUnsupportedError(f"{what} is not supported symbolically at {line}:{column}")

    def _parameter(self, node: dsl.Node) -> Fraction:
        if self.t is None:
            self._unsupported(node, "the parameter t without a numeric value")
        return self.t

    def symbol(self, node: dsl.Symbol) -> SymValue:
        name = node.name
        if name == 'I':
            return WordPoly.identity()
        if name not in LETTERS or LETTERS[name].is_d_image:
            self._unsupported(node, f"symbol '{name}'")
        if self.eliminate and name == 'w1':
            return WordPoly.letter('w0') + WordPoly.letter('a')
        if self.eliminate and name == 'wt':
            return WordPoly.letter('w0') + WordPoly.letter('a').scale(self._parameter(node))
        return WordPoly.letter(name)

    def add(self, node: dsl.Node, left: SymValue, right: SymValue) -> SymValue:
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left + right
        if isinstance(left, Fraction):
            left = self._lift(node, left, right)
        if isinstance(right, Fraction):
            right = self._lift(node, right, left)
        if type(left) is not type(right):
            self._unsupported(node, "adding traced and untraced terms")
        return left + right

    def _lift(self, node: dsl.Node, number: Fraction, like: SymValue) -> SymValue:
        if isinstance(like, WordPoly) and like.degree == 0:
            return WordPoly.identity().scale(number)
        if number == 0:
            return type(like).zero(like.degree)
        self._unsupported(node, "adding a number to a form")

    def multiply(self, node: dsl.Node, left: SymValue, right: SymValue) -> SymValue:
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left * right
        if isinstance(left, Fraction):
            return right.scale(left)
        if isinstance(right, Fraction):
            return left.scale(right)
        if isinstance(left, WordPoly) and isinstance(right, WordPoly):
            return left * right
        self._unsupported(node, "a product involving traces")

    def word(self, node: dsl.Node, value: SymValue, what: str) -> WordPoly:
        if not isinstance(value, WordPoly):
            self._unsupported(node, what)
        return value

    def expand(self, node: dsl.Node) -> SymValue:
        if isinstance(node, dsl.Rational):
            return node.value
        if isinstance(node, dsl.Param):
            return self._parameter(node)
        if isinstance(node, dsl.Symbol):
            return self.symbol(node)
        if isinstance(node, dsl.Add):
            return self.add(node, self.expand(node.left), self.expand(node.right))
        if isinstance(node, dsl.Sub):
            return self.add(node, self.expand(node.left), -self.expand(node.right))
        if isinstance(node, dsl.Neg):
            return -self.expand(node.operand)
        if isinstance(node, (dsl.Scale, dsl.Wedge)):
            return self.multiply(node, self.expand(node.left), self.expand(node.right))
        if isinstance(node, dsl.Power):
            base = self.expand(node.base)
            if not isinstance(base, Fraction):
                self._unsupported(node, "** on a non-numeric base")
            return base ** node.exponent
        if isinstance(node, dsl.Bracket):
            left = self.word(node, self.expand(node.left), "bracket of traces")
            return left.bracket(self.word(node, self.expand(node.right), "bracket of traces"))
        if isinstance(node, dsl.Deriv):
            value = self.expand(node.operand)
            if isinstance(value, TWPolynomial):
                return apply_d(value)
            return self.word(node, value, "d of a number").d()
        if isinstance(node, dsl.Curv):
            w = self.word(node, self.expand(node.connection), "curvature of a trace")
            return w.d() + w * w
        if isinstance(node, dsl.CovDeriv):
            w = self.word(node, self.expand(node.connection), "covariant derivative")
            a = self.word(node, self.expand(node.operand), "covariant derivative of a trace")
            return a.d() + w.bracket(a)
        if isinstance(node, dsl.Trace):
            return self.word(node, self.expand(node.operand), "trace of a trace").trace()
        if isinstance(node, dsl.Contract):
            self._unsupported(node, "contraction ic(xi; .)")
        raise TypeError(f"nodo desconocido: {type(node).__name__}")


def expand(ast: dsl.Node, t=None, eliminate: bool = True) -> SymValue:
    """
    Forma normal multilineal de una expresión del DSL.

    Sustituye F(w) = dw + w w, D(w; b) = db + [w, b] y corchetes por
    diferencias de palabras con signo. Con ``eliminate`` se reescriben
    w1 = w0 + a y wt = w0 + t a, de modo que las identidades entre
    presentaciones se reducen a la forma normal vacía.

    Args:
        ast (dsl.Node): Expresión ya verificada por el parser
        t (Number, optional): Valor racional del parámetro t
        eliminate (bool): Eliminar w1 y wt en favor de w0 y a

    Returns:
        Fraction | WordPoly | TWPolynomial: Forma normal

    Raises:
        SymbolicUnsupportedError: Coordenadas, covectores, nombres de base,
            contracciones o productos de trazas
    """
    return _Expander(t, eliminate).expand(ast)


@dataclass(frozen=True)
class Verdict:
    """
    Resultado de una verificación simbólica.

    Atributos:
        passed (bool): True si lhs - rhs tiene forma normal vacía
        certificate (str): Forma normal no nula de lhs - rhs (vacío si pasa)
    """
    passed: bool
    certificate: str = ''


def _difference(lhs: SymValue, rhs: SymValue) -> SymValue:
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return lhs - rhs
    if isinstance(rhs, Fraction) and rhs == 0:
        return lhs
    if isinstance(lhs, Fraction) and lhs == 0:
        return -rhs
    if type(lhs) is not type(rhs):
        raise SymbolicUnsupportedError("comparing traced and untraced expressions")
    return lhs - rhs


def verify_identity(lhs: dsl.Node, rhs: dsl.Node, t=None) -> Verdict:
    """
    PASS si y solo si expand(lhs) - expand(rhs) es la forma normal vacía.

    Args:
        lhs (dsl.Node): Lado izquierdo
        rhs (dsl.Node): Lado derecho
        t (Number, optional): Valor del parámetro t

    Returns:
        Verdict: Veredicto con certificado (contraejemplo) si falla
    """
    residual = _difference(expand(lhs, t), expand(rhs, t))
    if isinstance(residual, Fraction):
        passed = residual == 0
    else:
        passed = residual.is_zero()
    if passed:
        return Verdict(True)
    logger.debug(f"✗ Residuo simbólico no nulo: {residual}")
    return Verdict(False, str(residual))
