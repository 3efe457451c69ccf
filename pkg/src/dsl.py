"""
Módulo del lenguaje de expresiones (DSL) para identidades y escenarios.

Sintaxis ASCII con ortografía fija:
- Símbolos genéricos: w0 w1 wt a chi xi, parámetro t
- F(w) curvatura, D(w; a) derivada covariante, d(...) derivada exterior,
  tr(...) traza, ic(xi; a) contracción, [A, B] corchete graduado
- ``^`` producto exterior, ``*`` múltiplo escalar, ``**`` potencia de
  expresiones numéricas o coordenadas (x**2, t**2)
- Coordenadas x y z, covectores dx dy dz, identidad I y nombres de base
  del álgebra (E F_ H para sl2)

Precedencia: multiplicación escalar > wedge > menos unario > suma/resta.
La gramática completa (EBNF) está en GRAMATICA.md.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from .liealg import SL2, LieAlgebraSpec

# Configurar logging
logger = logging.getLogger(__name__)

Position = Tuple[int, int]

CALLS = ('d', 'tr', 'F', 'D', 'ic')
PARAMETER = 't'


# ============================================================================
# ERRORES
# ============================================================================

class DSLError(ValueError):
    """Error del DSL con posición línea:columna."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at {line}:{column}")
        self.message = message
        self.line = line
        self.column = column


class DSLSyntaxError(DSLError):
    """Error sintáctico; ``expected`` es el conjunto de tokens esperados."""

    def __init__(self, message: str, line: int, column: int,
                 expected: FrozenSet[str] = frozenset()):
        super().__init__(message, line, column)
        self.expected = expected


class UnknownSymbolError(DSLError):
    """Nombre no declarado."""


class DegreeMismatchError(DSLError):
    """Grados (o tipos de valor) incompatibles en una expresión."""


# ============================================================================
# ANÁLISIS LÉXICO
# ============================================================================

@dataclass(frozen=True)
class Token:
    kind: str          # 'number', 'ident', 'op', 'eof'
    text: str
    line: int
    column: int


_OPERATORS = ('**', '+', '-', '*', '^', '/', '(', ')', '[', ']', ',', ';')


def tokenize(src: str, origin: Position = (1, 1)) -> List[Token]:
    """
    Divide el texto en tokens conservando línea y columna.

    Args:
        src (str): Texto fuente
        origin (Position): Posición del primer carácter (para textos incrustados)

    Returns:
        List[Token]: Tokens terminados con un token 'eof'
    """
    tokens = []
    line, column = origin
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == '\n':
            line, column = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            column += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(Token('number', src[i:j], line, column))
            column += j - i
            i = j
            continue
        if ch.isalpha() or ch == '_':
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == '_'):
                j += 1
            tokens.append(Token('ident', src[i:j], line, column))
            column += j - i
            i = j
            continue
        op = next((o for o in _OPERATORS if src.startswith(o, i)), None)
        if op is None:
            raise DSLSyntaxError(f"unexpected character {ch!r}", line, column)
        tokens.append(Token('op', op, line, column))
        column += len(op)
        i += len(op)
    if src and not src.endswith('\n'):
        # Fin de entrada tras el terminador de línea implícito.
        column += 1
    tokens.append(Token('eof', '', line, column))
    _check_balance(tokens)
    return tokens


def _check_balance(tokens: List[Token]) -> None:
    names = {'(': 'parenthesis', '[': 'bracket'}
    closers = {')': '(', ']': '['}
    stack: List[Token] = []
    for tok in tokens:
        if tok.kind == 'op' and tok.text in names:
            stack.append(tok)
        elif tok.kind == 'op' and tok.text in closers:
            if not stack or stack[-1].text != closers[tok.text]:
                kind = names[closers[tok.text]]
                raise DSLSyntaxError(f"unbalanced {kind}", tok.line, tok.column,
                                     frozenset({tok.text}))
            stack.pop()
        elif tok.kind == 'eof' and stack:
            closing = ')' if stack[-1].text == '(' else ']'
            raise DSLSyntaxError(f"unbalanced {names[stack[-1].text]}", tok.line, tok.column,
                                 frozenset({closing}))


# ============================================================================
# AST
# ============================================================================

@dataclass(frozen=True)
class Node:
    pos: Position = field(default=(1, 1), compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Symbol(Node):
    name: str


@dataclass(frozen=True)
class Rational(Node):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'value', Fraction(self.value))
        if self.value < 0:
            raise ValueError("los literales racionales son no negativos; use Neg")


@dataclass(frozen=True)
class Param(Node):
    pass


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class Scale(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: int


@dataclass(frozen=True)
class Wedge(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Bracket(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Deriv(Node):
    operand: Node


@dataclass(frozen=True)
class CovDeriv(Node):
    connection: Node
    operand: Node


@dataclass(frozen=True)
class Curv(Node):
    connection: Node


@dataclass(frozen=True)
class Trace(Node):
    operand: Node


@dataclass(frozen=True)
class Contract(Node):
    vector: Node
    operand: Node


# ============================================================================
# TABLA DE SÍMBOLOS
# ============================================================================

@dataclass(frozen=True)
class NodeType:
    """Tipo inferido: kind en {'number', 'scalar', 'matrix', 'vector'} y grado."""
    kind: str
    degree: int


GENERIC_SYMBOLS: Dict[str, NodeType] = {
    'w0': NodeType('matrix', 1),
    'w1': NodeType('matrix', 1),
    'wt': NodeType('matrix', 1),
    'a': NodeType('matrix', 1),
    'chi': NodeType('matrix', 0),
    'xi': NodeType('vector', 0),
}

CHART_SYMBOLS: Dict[str, NodeType] = {
    'x': NodeType('scalar', 0),
    'y': NodeType('scalar', 0),
    'z': NodeType('scalar', 0),
    'dx': NodeType('scalar', 1),
    'dy': NodeType('scalar', 1),
    'dz': NodeType('scalar', 1),
    'I': NodeType('matrix', 0),
}


def default_symbols(spec: Optional[LieAlgebraSpec] = SL2,
                    generic: bool = True) -> Dict[str, NodeType]:
    """
    Tabla de símbolos por defecto.

    Args:
        spec (LieAlgebraSpec): Álgebra cuyos nombres de base se aceptan
        generic (bool): Incluir w0 w1 wt a chi xi

    Returns:
        Dict[str, NodeType]: Nombre -> tipo
    """
    table = dict(CHART_SYMBOLS)
    if spec is not None:
        table.update({name: NodeType('matrix', 0) for name in spec.basis_names})
    if generic:
        table.update(GENERIC_SYMBOLS)
    return table


# ============================================================================
# PARSER (descenso recursivo)
# ============================================================================

class Parser:
    """
    Parser de descenso recursivo sobre la lista de tokens.

    expr   ::= term { ('+' | '-') term }
    term   ::= '-' term | wedge
    wedge  ::= scaled { '^' scaled }
    scaled ::= power { '*' power }
    power  ::= atom [ '**' NUMBER ]
    atom   ::= NUMBER [ '/' NUMBER ] | 't' | IDENT | call | '(' expr ')' | '[' expr ',' expr ']'
    """

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def _at(self, text: str) -> bool:
        return self.current.kind == 'op' and self.current.text == text

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            self._fail({f"'{text}'"})
        return self._advance()

    def _fail(self, expected) -> None:
        tok = self.current
        found = 'end of input' if tok.kind == 'eof' else repr(tok.text)
        listing = ', '.join(sorted(expected))
        raise DSLSyntaxError(f"expected one of {{{listing}}}, found {found}",
                             tok.line, tok.column, frozenset(expected))

    def parse(self) -> Node:
        node = self.expr()
        if self.current.kind != 'eof':
            self._fail({"'+'", "'-'", "'^'", "'*'", 'end of input'})
        return node

    def expr(self) -> Node:
        node = self.term()
        while self._at('+') or self._at('-'):
            op = self._advance()
            right = self.term()
            cls = Add if op.text == '+' else Sub
            node = cls(node, right, pos=(op.line, op.column))
        return node

    def term(self) -> Node:
        if self._at('-'):
            op = self._advance()
            return Neg(self.term(), pos=(op.line, op.column))
        return self.wedge()

    def wedge(self) -> Node:
        node = self.scaled()
        while self._at('^'):
            op = self._advance()
            node = Wedge(node, self.scaled(), pos=(op.line, op.column))
        return node

    def scaled(self) -> Node:
        node = self.power()
        while self._at('*'):
            op = self._advance()
            node = Scale(node, self.power(), pos=(op.line, op.column))
        return node

    def power(self) -> Node:
        node = self.atom()
        if self._at('**'):
            op = self._advance()
            if self.current.kind != 'number':
                self._fail({'number'})
            node = Power(node, int(self._advance().text), pos=(op.line, op.column))
        return node

    def atom(self) -> Node:
        tok = self.current
        pos = (tok.line, tok.column)
        if tok.kind == 'number':
            self._advance()
            value = Fraction(int(tok.text))
            if self._at('/'):
                self._advance()
                if self.current.kind != 'number':
                    self._fail({'number'})
                denom = self._advance()
                if int(denom.text) == 0:
                    raise DSLSyntaxError("zero denominator in rational literal",
                                         denom.line, denom.column)
                value = Fraction(int(tok.text), int(denom.text))
            return Rational(value, pos=pos)
        if tok.kind == 'ident':
            self._advance()
            if tok.text in CALLS and self._at('('):
                return self._call(tok.text, pos)
            if tok.text == PARAMETER:
                return Param(pos=pos)
            return Symbol(tok.text, pos=pos)
        if self._at('('):
            self._advance()
            node = self.expr()
            self._expect(')')
            return node
        if self._at('['):
            self._advance()
            left = self.expr()
            self._expect(',')
            right = self.expr()
            self._expect(']')
            return Bracket(left, right, pos=pos)
        self._fail({'number', 'identifier', "'('", "'['"})

    def _call(self, name: str, pos: Position) -> Node:
        self._expect('(')
        first = self.expr()
        if name in ('D', 'ic'):
            self._expect(';')
            second = self.expr()
            self._expect(')')
            return (CovDeriv if name == 'D' else Contract)(first, second, pos=pos)
        self._expect(')')
        return {'d': Deriv, 'tr': Trace, 'F': Curv}[name](first, pos=pos)


# ============================================================================
# INFERENCIA DE TIPOS Y GRADOS
# ============================================================================

_PRODUCT_KIND = {
    ('number', 'number'): 'number',
    ('number', 'scalar'): 'scalar',
    ('scalar', 'number'): 'scalar',
    ('number', 'matrix'): 'matrix',
    ('matrix', 'number'): 'matrix',
    ('scalar', 'scalar'): 'scalar',
    ('scalar', 'matrix'): 'matrix',
    ('matrix', 'scalar'): 'matrix',
    ('matrix', 'matrix'): 'matrix',
}


def infer_type(node: Node, symbols: Mapping[str, NodeType]) -> NodeType:
    """
    Infiere tipo y grado de un nodo verificando la consistencia de grados.

    Raises:
        UnknownSymbolError: Nombre no declarado
        DegreeMismatchError: Grados o tipos incompatibles
    """
    line, column = node.pos

    def fail(message: str):
        raise DegreeMismatchError(message, line, column)

    def operand(child: Node, allow_vector: bool = False) -> NodeType:
        ty = infer_type(child, symbols)
        if ty.kind == 'vector' and not allow_vector:
            raise DegreeMismatchError("a vector field can only appear as the first argument of ic",
                                      *child.pos)
        return ty

    if isinstance(node, Symbol):
        if node.name not in symbols:
            raise UnknownSymbolError(f"unknown symbol '{node.name}'", line, column)
        return symbols[node.name]
    if isinstance(node, (Rational, Param)):
        return NodeType('number', 0)
    if isinstance(node, (Add, Sub)):
        lt, rt = operand(node.left), operand(node.right)
        if lt.degree != rt.degree:
            fail(f"degree mismatch: {lt.degree} vs {rt.degree}")
        kinds = {lt.kind, rt.kind}
        if len(kinds) == 1:
            return lt
        if kinds == {'number', 'scalar'}:
            return NodeType('scalar', lt.degree)
        fail(f"cannot add {lt.kind} and {rt.kind} values")
    if isinstance(node, Neg):
        return operand(node.operand)
    if isinstance(node, (Scale, Wedge)):
        lt, rt = operand(node.left), operand(node.right)
        if isinstance(node, Scale) and lt.degree and rt.degree:
            fail(f"scalar multiple needs a degree-0 factor, got degrees {lt.degree} and {rt.degree}")
        return NodeType(_PRODUCT_KIND[(lt.kind, rt.kind)], lt.degree + rt.degree)
    if isinstance(node, Power):
        bt = operand(node.base)
        if bt.kind == 'matrix' or bt.degree:
            fail("** applies only to numbers and coordinate functions")
        return bt
    if isinstance(node, Bracket):
        lt, rt = operand(node.left), operand(node.right)
        if lt.kind != 'matrix' or rt.kind != 'matrix':
            fail("bracket needs matrix-valued operands")
        return NodeType('matrix', lt.degree + rt.degree)
    if isinstance(node, Deriv):
        ot = operand(node.operand)
        if ot.kind == 'number':
            fail("d of a constant number")
        return NodeType(ot.kind, ot.degree + 1)
    if isinstance(node, (CovDeriv, Curv)):
        ct = operand(node.connection)
        if ct.kind != 'matrix' or ct.degree != 1:
            fail(f"expected a degree-1 connection, got degree {ct.degree}")
        if isinstance(node, Curv):
            return NodeType('matrix', 2)
        ot = operand(node.operand)
        if ot.kind != 'matrix':
            fail("covariant derivative of a non matrix-valued form")
        return NodeType('matrix', ot.degree + 1)
    if isinstance(node, Trace):
        ot = operand(node.operand)
        if ot.kind != 'matrix':
            fail("tr needs a matrix-valued form")
        return NodeType('scalar', ot.degree)
    if isinstance(node, Contract):
        vt = operand(node.vector, allow_vector=True)
        if vt.kind != 'vector':
            fail("ic needs a vector field as first argument")
        ot = operand(node.operand)
        if ot.kind == 'number' or ot.degree == 0:
            fail("contraction of a degree-0 form")
        return NodeType(ot.kind, ot.degree - 1)
    raise TypeError(f"nodo desconocido: {type(node).__name__}")


def parse(src: str, symbols: Optional[Mapping[str, NodeType]] = None,
          origin: Position = (1, 1)) -> Node:
    """
    Analiza y verifica tipos de una expresión del DSL.

    Args:
        src (str): Texto de la expresión
        symbols (Mapping, optional): Tabla de símbolos; por defecto default_symbols()
        origin (Position): Posición del texto dentro de un archivo mayor

    Returns:
        Node: AST verificado

    Raises:
        DSLSyntaxError, UnknownSymbolError, DegreeMismatchError
    """
    table = default_symbols() if symbols is None else symbols
    node = Parser(tokenize(src, origin)).parse()
    infer_type(node, table)
    return node


# ============================================================================
# IMPRESIÓN CANÓNICA
# ============================================================================

_ADD, _NEG, _WEDGE, _SCALE, _POWER, _ATOM = 1, 2, 3, 4, 5, 6


def _format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _render(node: Node) -> Tuple[str, int]:
    if isinstance(node, Add):
        return f"{_wrap(node.left, _ADD)} + {_wrap(node.right, _NEG)}", _ADD
    if isinstance(node, Sub):
        return f"{_wrap(node.left, _ADD)} - {_wrap(node.right, _NEG)}", _ADD
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand, _NEG)}", _NEG
    if isinstance(node, Wedge):
        return f"{_wrap(node.left, _WEDGE)} ^ {_wrap(node.right, _SCALE)}", _WEDGE
    if isinstance(node, Scale):
        return f"{_wrap(node.left, _SCALE)}*{_wrap(node.right, _POWER)}", _SCALE
    if isinstance(node, Power):
        return f"{_wrap(node.base, _ATOM)}**{node.exponent}", _POWER
    if isinstance(node, Rational):
        level = _ATOM if node.value.denominator == 1 else _POWER
        return _format_rational(node.value), level
    if isinstance(node, Param):
        return PARAMETER, _ATOM
    if isinstance(node, Symbol):
        return node.name, _ATOM
    if isinstance(node, Bracket):
        return f"[{pretty_print(node.left)}, {pretty_print(node.right)}]", _ATOM
    if isinstance(node, Deriv):
        return f"d({pretty_print(node.operand)})", _ATOM
    if isinstance(node, Trace):
        return f"tr({pretty_print(node.operand)})", _ATOM
    if isinstance(node, Curv):
        return f"F({pretty_print(node.connection)})", _ATOM
    if isinstance(node, CovDeriv):
        return f"D({pretty_print(node.connection)}; {pretty_print(node.operand)})", _ATOM
    if isinstance(node, Contract):
        return f"ic({pretty_print(node.vector)}; {pretty_print(node.operand)})", _ATOM
    raise TypeError(f"nodo desconocido: {type(node).__name__}")


def _wrap(node: Node, min_level: int) -> str:
    text, level = _render(node)
    return f"({text})" if level < min_level else text


def pretty_print(node: Node) -> str:
    """Texto canónico; parse(pretty_print(a)) es estructuralmente igual a a."""
    return _render(node)[0]
