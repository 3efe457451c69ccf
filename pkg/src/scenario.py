"""
Módulo de escenarios: archivos de texto con declaraciones y chequeos en el DSL.

Formato (ver GRAMATICA.md):

    algebra: sl2
    cap: 4
    t: 1/2
    ---
    group g = I + x*E
    connection w0 = flat g
    connection w1 = E*dx + F_*dy + H*dz
    matrix chi = H
    vector xi = 1, 0, z
    check bf: F(1/2*w0 + 1/2*w1) == -1/4*a ^ a
    check symbolic eq5: 2*F(w0) + D(w0; a) == F(w0) + F(w1) - a ^ a
    check eom: builtin eom_residuals
    report Q: builtin transgression

Las líneas que empiezan con espacios continúan la sentencia anterior.
Todo nombre debe declararse antes de usarse; ``a`` (y ``wt`` si hay
valores de t) se derivan de w0 y w1.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
import re
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from . import dsl, symdga
from .chern import (affine_identity, change_variables, curvature_interpolation, eom_residuals,
                    identity7_check, inverse_change, presentation_residuals, q_general,
                    splitting_check, superpotential_diffeo, superpotential_gauge, transgression,
                    transgression_alt, transgression_average, two_connection_chain)
from .evaluation import Comparison, InstanceEvaluator, compare_values
from .forms import VectorFieldSym
from .gauge import Connection, GroupJet, flat_connection, gauge_transform
from .jets import Jet
from .liealg import LieAlgebraSpec, LieMatrix, get_algebra
from .report_generator import CheckResult, Report

# Configurar logging
logger = logging.getLogger(__name__)

DECLARATION_KINDS = ('group', 'connection', 'form', 'matrix', 'vector')
HEADER_KEYS = ('algebra', 'cap', 't')

_DECLARATION = re.compile(r'^(group|connection|form|matrix|vector)\s+([A-Za-z_]\w*)\s*=\s*')
_CHECK = re.compile(r'^(check|report)\s+(symbolic\s+)?([A-Za-z_]\w*)\s*:\s*')
_BUILTIN = re.compile(r'^builtin\s+([A-Za-z_]\w*)\s*$')


class ScenarioError(ValueError):
    """Error de formato o de contenido de un escenario, con posición."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"{message} at {line}:{column}")
        self.line = line
        self.column = column


# ============================================================================
# MODELO
# ============================================================================

@dataclass
class Statement:
    """Sentencia lógica: texto (con continuaciones) y línea de inicio."""
    text: str
    line: int

    def position(self, offset: int) -> Tuple[int, int]:
        """Línea y columna de un desplazamiento dentro del texto."""
        before = self.text[:offset]
        newlines = before.count('\n')
        if newlines:
            return self.line + newlines, offset - before.rfind('\n')
        return self.line, offset + 1


@dataclass
class Declaration:
    kind: str
    name: str
    source: str
    statement: Statement
    offset: int


@dataclass
class CheckSpec:
    """
    Chequeo de un escenario.

    Atributos:
        id (str): Identificador
        mode (str): 'check' o 'report'
        symbolic (bool): Usar el backend simbólico
        builtin (str): Nombre de identidad incorporada (o None)
        lhs, rhs (dsl.Node): Lados de la igualdad (rhs None en reportes)
    """
    id: str
    mode: str
    symbolic: bool = False
    builtin: Optional[str] = None
    lhs: Optional[dsl.Node] = None
    rhs: Optional[dsl.Node] = None
    line: int = 0


@dataclass
class Scenario:
    """
    Escenario cargado: álgebra, cap, valores de t, valores declarados y chequeos.
    """
    name: str
    algebra: str
    cap: int
    t_values: Tuple[Fraction, ...] = ()
    bindings: Dict[str, object] = field(default_factory=dict)
    checks: List[CheckSpec] = field(default_factory=list)

    @property
    def spec(self) -> LieAlgebraSpec:
        return get_algebra(self.algebra)


# ============================================================================
# CARGA
# ============================================================================

def _strip_comment(line: str) -> str:
    index = line.find('#')
    return line if index < 0 else line[:index]


def _statements(lines: Sequence[str], first_line: int) -> List[Statement]:
    statements: List[Statement] = []
    for number, raw in enumerate(lines, start=first_line):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        if line[0].isspace():
            if not statements:
                raise ScenarioError("continuation line without a statement", number)
            previous = statements[-1]
            gap = number - previous.line - previous.text.count('\n')
            previous.text += '\n' * gap + line
            continue
        statements.append(Statement(line, number))
    return statements


def _parse_rational(text: str, line: int) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ScenarioError(f"invalid rational {text.strip()!r}", line) from None
    return value


def _split_top_level(text: str) -> List[Tuple[int, str]]:
    """Divide por comas fuera de paréntesis y corchetes; devuelve (desplazamiento, parte)."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in '([':
            depth += 1
        elif ch in ')]':
            depth -= 1
        elif ch == ',' and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
    parts.append((start, text[start:]))
    return parts


class ScenarioLoader:
    """
    Lee un archivo de escenario, evalúa las declaraciones y analiza los chequeos.
    """

    def __init__(self, default_cap: int = 4):
        self.default_cap = default_cap

    def load(self, path: Union[str, Path]) -> Scenario:
        """
        Carga un escenario desde disco.

        Raises:
            FileNotFoundError: Si el archivo no existe
            ScenarioError, dsl.DSLError: Errores de formato o de tipos con posición
        """
        path = Path(path)
        logger.info(f"Cargando escenario: {path}")
        text = path.read_text(encoding='utf-8')
        scenario = self.loads(text, name=path.stem)
        logger.info(f"✓ Escenario cargado: {len(scenario.bindings)} declaraciones, "
                    f"{len(scenario.checks)} chequeos")
        return scenario

    def loads(self, text: str, name: str = 'scenario') -> Scenario:
        lines = text.split('\n')
        try:
            separator = next(i for i, line in enumerate(lines) if line.strip() == '---')
        except StopIteration:
            raise ScenarioError("missing '---' separator after the header", len(lines)) from None

        header = self._parse_header(lines[:separator])
        scenario = Scenario(name=name, algebra=header.get('algebra', 'sl2'),
                            cap=int(header.get('cap', self.default_cap)),
                            t_values=header.get('t', ()))
        try:
            spec = scenario.spec
        except KeyError:
            raise ScenarioError(f"unknown algebra {scenario.algebra!r}", 1) from None

        symbols = dsl.default_symbols(spec, generic=False)
        evaluator = InstanceEvaluator(spec, scenario.cap)
        for statement in _statements(lines[separator + 1:], separator + 2):
            match = _DECLARATION.match(statement.text)
            if match:
                decl = Declaration(match.group(1), match.group(2), statement.text[match.end():],
                                   statement, match.end())
                self._declare(scenario, decl, symbols, evaluator)
                continue
            match = _CHECK.match(statement.text)
            if match:
                scenario.checks.append(self._parse_check(scenario, statement, match, symbols, spec))
                continue
            raise ScenarioError(f"unrecognized statement {statement.text.split()[0]!r}",
                                statement.line)
        return scenario

    def _parse_header(self, lines: Sequence[str]) -> Dict:
        header: Dict = {}
        for number, raw in enumerate(lines, start=1):
            line = _strip_comment(raw).strip()
            if not line:
                continue
            key, sep, value = line.partition(':')
            key = key.strip()
            if not sep or key not in HEADER_KEYS:
                raise ScenarioError(f"invalid header line {line!r}", number)
            if key == 't':
                values = tuple(_parse_rational(v, number) for v in value.split(','))
                if any(v < 0 or v > 1 for v in values):
                    raise ScenarioError("t values must lie in [0, 1]", number)
                header['t'] = values
            elif key == 'cap':
                try:
                    header['cap'] = int(value)
                except ValueError:
                    raise ScenarioError(f"invalid cap {value.strip()!r}", number) from None
            else:
                header[key] = value.strip()
        return header

    # ------------------------------------------------------------------
    # Declaraciones
    # ------------------------------------------------------------------

    def _expression(self, decl: Declaration, source: str, offset: int,
                    symbols: Dict[str, dsl.NodeType], kind: str, degree: Optional[int]):
        origin = decl.statement.position(offset)
        node = dsl.parse(source, symbols, origin)
        ty = dsl.infer_type(node, symbols)
        if ty.kind != kind or (degree is not None and ty.degree != degree):
            expected = kind if degree is None else f"{kind} of degree {degree}"
            raise ScenarioError(f"{decl.kind} '{decl.name}' must be a {expected}, "
                                f"got {ty.kind} of degree {ty.degree}", *origin)
        return node, ty

    def _declare(self, scenario: Scenario, decl: Declaration, symbols: Dict[str, dsl.NodeType],
                 evaluator: InstanceEvaluator) -> None:
        if decl.name in symbols:
            raise ScenarioError(f"'{decl.name}' is already defined", decl.statement.line)
        source = decl.source.strip()
        offset = decl.offset + (len(decl.source) - len(decl.source.lstrip()))
        words = source.split()

        if decl.kind == 'group':
            node, _ = self._expression(decl, source, offset, symbols, 'matrix', 0)
            value = GroupJet(evaluator.evaluate(node).component(()))
            symbols[decl.name] = dsl.NodeType('matrix', 0)
            evaluator.bind(decl.name, value.matrix)
        elif decl.kind == 'connection':
            value = self._connection(scenario, decl, words, source, offset, symbols, evaluator)
            symbols[decl.name] = dsl.NodeType('matrix', 1)
            evaluator.bind(decl.name, value)
        elif decl.kind == 'vector':
            value = self._vector(decl, source, offset, symbols, evaluator)
            symbols[decl.name] = dsl.NodeType('vector', 0)
            evaluator.bind(decl.name, value)
        else:
            degree = 0 if decl.kind == 'matrix' else None
            node, ty = self._expression(decl, source, offset, symbols, 'matrix', degree)
            value = evaluator.evaluate(node)
            symbols[decl.name] = ty
            evaluator.bind(decl.name, value)
            if decl.kind == 'matrix':
                value = value.component(()) or LieMatrix.zero(scenario.spec.matrix_size,
                                                               scenario.cap)
        scenario.bindings[decl.name] = value
        self._derive(scenario, symbols)

    def _connection(self, scenario, decl, words, source, offset, symbols, evaluator) -> Connection:
        if words == ['zero']:
            return Connection.zero(scenario.spec.matrix_size, scenario.cap)
        if len(words) == 2 and words[0] == 'flat':
            return flat_connection(self._group(decl, words[1], scenario))
        if len(words) == 3 and words[0] == 'gauge':
            g = self._group(decl, words[1], scenario)
            w = scenario.bindings.get(words[2])
            if not isinstance(w, Connection):
                raise ScenarioError(f"'{words[2]}' is not a declared connection", decl.statement.line)
            return gauge_transform(g, w)
        node, _ = self._expression(decl, source, offset, symbols, 'matrix', 1)
        return Connection(evaluator.evaluate(node))

    @staticmethod
    def _group(decl: Declaration, name: str, scenario: Scenario) -> GroupJet:
        value = scenario.bindings.get(name)
        if not isinstance(value, GroupJet):
            raise ScenarioError(f"unknown symbol '{name}'", decl.statement.line)
        return value

    def _vector(self, decl, source, offset, symbols, evaluator) -> VectorFieldSym:
        parts = _split_top_level(source)
        if len(parts) != 3:
            raise ScenarioError(f"vector '{decl.name}' needs three components",
                                decl.statement.line)
        components = []
        for start, part in parts:
            lead = len(part) - len(part.lstrip())
            origin = decl.statement.position(offset + start + lead)
            node = dsl.parse(part.strip(), symbols, origin)
            ty = dsl.infer_type(node, symbols)
            if ty.kind not in ('number', 'scalar') or ty.degree != 0:
                raise ScenarioError(f"vector component must be a function, got {ty.kind} "
                                    f"of degree {ty.degree}", *origin)
            value = evaluator.evaluate(node)
            if isinstance(value, Fraction):
                components.append(Jet.constant(value, evaluator.cap))
            else:
                components.append(value.component(()) or Jet.zero(evaluator.cap))
        return VectorFieldSym(tuple(components))

    @staticmethod
    def _derive(scenario: Scenario, symbols: Dict[str, dsl.NodeType]) -> None:
        declared = scenario.bindings
        if 'w0' in declared and 'w1' in declared and 'a' not in declared:
            symbols['a'] = dsl.NodeType('matrix', 1)
            if scenario.t_values and 'wt' not in declared:
                symbols['wt'] = dsl.NodeType('matrix', 1)

    # ------------------------------------------------------------------
    # Chequeos
    # ------------------------------------------------------------------

    def _parse_check(self, scenario: Scenario, statement: Statement, match,
                     symbols: Dict[str, dsl.NodeType], spec: LieAlgebraSpec) -> CheckSpec:
        mode, symbolic, check_id = match.group(1), bool(match.group(2)), match.group(3)
        body = statement.text[match.end():]
        check = CheckSpec(check_id, mode, symbolic, line=statement.line)
        builtin = _BUILTIN.match(body.strip())
        if builtin:
            if builtin.group(1) not in BUILTINS:
                raise ScenarioError(f"unknown builtin '{builtin.group(1)}'", statement.line)
            check.builtin = builtin.group(1)
            return check

        table = dsl.default_symbols(spec, generic=True) if symbolic else symbols
        if mode == 'report':
            check.lhs = dsl.parse(body, table, statement.position(match.end()))
            return check
        index = body.find('==')
        if index < 0:
            raise ScenarioError("check needs 'lhs == rhs' or 'builtin NAME'", statement.line)
        check.lhs = dsl.parse(body[:index], table, statement.position(match.end()))
        check.rhs = dsl.parse(body[index + 2:], table, statement.position(match.end() + index + 2))
        return check


# ============================================================================
# IDENTIDADES INCORPORADAS
# ============================================================================

@dataclass
class BuiltinOutcome:
    passed: bool
    value: str = ''
    valid_order: Optional[int] = None
    certificate: str = ''


def _require(scenario: Scenario, *names: str) -> List:
    missing = [n for n in names if n not in scenario.bindings]
    if missing:
        raise ValueError(f"builtin needs declarations: {', '.join(missing)}")
    return [scenario.bindings[n] for n in names]


def _all_agree(comparisons: Sequence[Tuple[str, Comparison]], value: str = '') -> BuiltinOutcome:
    orders = [c.valid_order for _, c in comparisons if c.valid_order is not None]
    for label, cmp in comparisons:
        if not cmp.passed:
            return BuiltinOutcome(False, value, cmp.valid_order, f"{label}: {cmp.certificate}")
    return BuiltinOutcome(True, value, min(orders) if orders else None)


def _value(form) -> BuiltinOutcome:
    return BuiltinOutcome(True, str(form), form.valid_order)


def _b_transgression(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    return _value(transgression(w1, w0))


def _b_transgression_alt(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    q = transgression(w1, w0)
    return _all_agree([('Q = Q_alt', compare_values(q, transgression_alt(w1, w0)))], str(q))


def _b_transgression_average(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    q = transgression(w1, w0)
    return _all_agree([('Q = Q_BF', compare_values(q, transgression_average(w1, w0)))], str(q))


def _b_splitting(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    q = transgression(w1, w0)
    return _all_agree([('escisión', compare_values(q, splitting_check(w1, w0)))], str(q))


def _b_two_connection_chain(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    first, *rest = two_connection_chain(w0, w1)
    return _all_agree([(f"miembro {k}", compare_values(first, other))
                       for k, other in enumerate(rest, start=2)])


def _b_identity7(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    comparisons = []
    for t in ts:
        first, second, third = identity7_check(w0, w1, t)
        comparisons += [(f"t={t} (1 = 2)", compare_values(first, second)),
                        (f"t={t} (1 = 3)", compare_values(first, third))]
    return _all_agree(comparisons)


def _b_q_general(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    q = transgression(w1, w0)
    comparisons = []
    for t in ts:
        w_t, a = change_variables(w0, w1, t)
        comparisons.append((f"t={t}", compare_values(q_general(w_t, a, t), q)))
    return _all_agree(comparisons, str(q))


def _b_eom_residuals(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    orders = []
    for t in ts:
        w_t, a = change_variables(w0, w1, t)
        residuals = eom_residuals(w_t, a, t)
        if not residuals.vanish():
            return BuiltinOutcome(False, valid_order=residuals.valid_order,
                                  certificate=f"t={t}: {residuals.r_curv} ; {residuals.r_cov}")
        orders.append(residuals.valid_order)
    return BuiltinOutcome(True, f"residuos nulos para t en {{{', '.join(map(str, ts))}}}",
                          min(orders) if orders else None)


def _b_presentation_residuals(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    comparisons = []
    for name, forms in presentation_residuals(w0, w1).items():
        comparisons += [(f"{name}[{k}]", compare_values(form, 0)) for k, form in enumerate(forms)]
    return _all_agree(comparisons, 'tres presentaciones on-shell')


def _b_change_of_variables(sc, ts):
    w0, w1 = _require(sc, 'w0', 'w1')
    comparisons = []
    for t in ts:
        w_t, a = change_variables(w0, w1, t)
        back0, back1 = inverse_change(w_t, a, t)
        comparisons += [(f"t={t} w0", compare_values(back0.form, w0.form)),
                        (f"t={t} w1", compare_values(back1.form, w1.form)),
                        (f"t={t} afín", compare_values(*affine_identity(w0, w1, t))),
                        (f"t={t} curvatura", compare_values(*curvature_interpolation(w0, w1, t)))]
    return _all_agree(comparisons)


def _b_superpotential_gauge(sc, ts):
    w0, w1, chi = _require(sc, 'w0', 'w1', 'chi')
    base = superpotential_gauge(w1 - w0, chi)
    comparisons = []
    for t in ts:
        w_t, a = change_variables(w0, w1, t)
        comparisons.append((f"t={t}", compare_values(superpotential_gauge(a, chi), base)))
    return _all_agree(comparisons, str(base))


def _b_superpotential_diffeo(sc, ts):
    w0, w1, xi = _require(sc, 'w0', 'w1', 'xi')
    values = []
    for t in ts:
        w_t, a = change_variables(w0, w1, t)
        values.append((t, superpotential_diffeo(a, w_t, t, xi)))
    t_ref, ref = values[0]
    return _all_agree([(f"t={t} vs t={t_ref}", compare_values(u, ref)) for t, u in values[1:]],
                      str(ref))


BUILTINS: Dict[str, Callable[[Scenario, Tuple[Fraction, ...]], BuiltinOutcome]] = {
    'transgression': _b_transgression,
    'transgression_alt': _b_transgression_alt,
    'transgression_average': _b_transgression_average,
    'splitting': _b_splitting,
    'two_connection_chain': _b_two_connection_chain,
    'identity7': _b_identity7,
    'q_general': _b_q_general,
    'eom_residuals': _b_eom_residuals,
    'presentation_residuals': _b_presentation_residuals,
    'change_of_variables': _b_change_of_variables,
    'superpotential_gauge': _b_superpotential_gauge,
    'superpotential_diffeo': _b_superpotential_diffeo,
}


# ============================================================================
# EJECUCIÓN
# ============================================================================

class ScenarioRunner:
    """Ejecuta los chequeos de un escenario y produce un Report."""

    def __init__(self, default_t: Sequence[Fraction] = (Fraction(0), Fraction(1, 2), Fraction(1)),
                 timing: bool = True):
        self.default_t = tuple(Fraction(t) for t in default_t)
        self.timing = timing

    def run(self, scenario: Scenario) -> Report:
        logger.info("=" * 80)
        logger.info(f"ESCENARIO {scenario.name} - álgebra {scenario.algebra}, cap {scenario.cap}")
        logger.info("=" * 80)
        evaluator = InstanceEvaluator(scenario.spec, scenario.cap, self._bindings(scenario))
        results = [self._run_check(scenario, check, evaluator) for check in scenario.checks]
        report = Report('scenario', scenario.name, scenario.algebra, scenario.cap, checks=results)
        marker = '✓' if report.passed else '✗'
        logger.info(f"{marker} Escenario {scenario.name}: {report.n_passed}/{len(results)}")
        return report

    @staticmethod
    def _bindings(scenario: Scenario) -> Dict[str, object]:
        bindings = {}
        for name, value in scenario.bindings.items():
            bindings[name] = value.matrix if isinstance(value, GroupJet) else value
        return bindings

    def _t_values(self, scenario: Scenario) -> Tuple[Fraction, ...]:
        return scenario.t_values or self.default_t

    def _run_check(self, scenario: Scenario, check: CheckSpec,
                   evaluator: InstanceEvaluator) -> CheckResult:
        backend = 'symbolic' if check.symbolic else 'instance'
        start = time.perf_counter()
        try:
            outcome = self._outcome(scenario, check, evaluator)
        except Exception as e:
            logger.error(f"✗ {check.id} (línea {check.line}) lanzó {type(e).__name__}: {e}")
            outcome = BuiltinOutcome(False, certificate=f"{type(e).__name__}: {e}")
        elapsed = time.perf_counter() - start if self.timing else None
        marker = '✓' if outcome.passed else '✗'
        logger.info(f"{marker} {check.id} [{backend}] {outcome.value}")
        detail = f"builtin {check.builtin}" if check.builtin else check.mode
        return CheckResult(check.id, backend, outcome.passed, outcome.valid_order,
                           outcome.certificate, outcome.value, detail, elapsed)

    def _outcome(self, scenario: Scenario, check: CheckSpec,
                 evaluator: InstanceEvaluator) -> BuiltinOutcome:
        t_values = self._t_values(scenario)
        if check.builtin:
            return BUILTINS[check.builtin](scenario, t_values)
        if check.symbolic:
            for t in (scenario.t_values or (None,)):
                verdict = symdga.verify_identity(check.lhs, check.rhs, t)
                if not verdict.passed:
                    where = '' if t is None else f"t={t}: "
                    return BuiltinOutcome(False, certificate=where + verdict.certificate)
            return BuiltinOutcome(True)
        if check.mode == 'report':
            current = evaluator.with_t(t_values[0]) if scenario.t_values else evaluator
            value = current.evaluate(check.lhs)
            return BuiltinOutcome(True, str(value), getattr(value, 'valid_order', None))
        orders = []
        for t in (scenario.t_values or (None,)):
            current = evaluator if t is None else evaluator.with_t(t)
            cmp = current.compare(check.lhs, check.rhs)
            if not cmp.passed:
                where = '' if t is None else f"t={t}: "
                return BuiltinOutcome(False, valid_order=cmp.valid_order,
                                      certificate=where + cmp.certificate)
            if cmp.valid_order is not None:
                orders.append(cmp.valid_order)
        return BuiltinOutcome(True, valid_order=min(orders) if orders else None)


def run_scenario(path: Union[str, Path], default_cap: int = 4,
                 default_t: Sequence[Fraction] = (Fraction(0), Fraction(1, 2), Fraction(1)),
                 timing: bool = True) -> Report:
    """
    Carga y ejecuta un escenario.

    Args:
        path (str | Path): Archivo .scn
        default_cap (int): Cap si la cabecera no lo fija
        default_t (Sequence): Valores de t si la cabecera no los fija
        timing (bool): Medir tiempos

    Returns:
        Report: Reporte del escenario

    Raises:
        FileNotFoundError, ScenarioError, dsl.DSLError
    """
    scenario = ScenarioLoader(default_cap).load(path)
    return ScenarioRunner(default_t, timing).run(scenario)
