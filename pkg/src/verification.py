"""
Módulo de orquestación de las suites de verificación.

Suites:
- symbolic: identidades del manifiesto probadas en el álgebra libre (symdga)
- instance: las mismas identidades y las propiedades estructurales sobre
  instancias aleatorias exactas (jets racionales)
- mutation: mutaciones de un coeficiente que deben fallar en ambos backends
- all: las tres anteriores

Cada chequeo es independiente: un chequeo que lanza una excepción se
registra como FAIL con la excepción como certificado.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import dsl, symdga
from .chern import (affine_identity, change_variables, curvature_interpolation, eom_residuals,
                    identity7_check, inverse_change, presentation_residuals, q_general,
                    splitting_check, superpotential_diffeo, superpotential_gauge, transgression,
                    transgression_alt, transgression_average, two_connection_chain)
from .evaluation import Comparison, InstanceEvaluator, compare_values
from .forms import contract, exterior_d, trace, wedge
from .gauge import covariant_d, curvature, gauge_transform, gauge_transform_tensorial
from .liealg import bracket, get_algebra
from .random_instances import InstanceGenerator
from .report_generator import CheckResult, Report

# Configurar logging
logger = logging.getLogger(__name__)

SUITES = ('symbolic', 'instance', 'mutation', 'all')
DEFAULT_T_SWEEP = (Fraction(0), Fraction(1, 5), Fraction(1, 2), Fraction(4, 5), Fraction(1))
DEFAULT_SUPERPOTENTIAL_T = (Fraction(0), Fraction(1, 2), Fraction(1))

Pairs = List[Tuple[str, str]]
Labelled = Iterable[Tuple[str, Comparison]]


class UsageError(ValueError):
    """Parámetros de ejecución inválidos (código de salida 2)."""


@dataclass
class Outcome:
    """Resultado interno de un chequeo antes de registrar tiempos."""
    passed: bool
    valid_order: Optional[int] = None
    certificate: str = ''
    value: str = ''
    detail: str = ''


def _leibniz_sign(p: int) -> int:
    return -1 if p % 2 else 1


class IdentityVerifier:
    """
    Ejecuta las suites de verificación con parámetros fijos.
    """

    def __init__(self, algebra: str = 'sl2', cap: int = 4, seed: int = 7, trials: int = 20,
                 structural_trials: int = 100, symbolic_suite: Optional[Mapping] = None,
                 mutations: Optional[Mapping] = None,
                 t_sweep: Sequence[Fraction] = DEFAULT_T_SWEEP,
                 superpotential_t: Sequence[Fraction] = DEFAULT_SUPERPOTENTIAL_T,
                 min_cap: int = 3, timing: bool = True, policy: Optional[Dict] = None):
        """
        Inicializa el verificador.

        Args:
            algebra (str): 'sl2' o 'sl3'
            cap (int): Cap de jets para instancias
            seed (int): Semilla raíz
            trials (int): Ensayos por identidad
            structural_trials (int): Ensayos por propiedad estructural
            symbolic_suite (Mapping): Manifiesto de identidades (config.suite_manifest)
            mutations (Mapping): Manifiesto de mutaciones
            t_sweep (Sequence): Valores de t para identidades paramétricas
            superpotential_t (Sequence): Valores de t para U(xi)
            min_cap (int): Cap mínimo de las suites con instancias
            timing (bool): Medir tiempos (False para reportes deterministas)
            policy (Dict): numerators / denominators / density del generador
        """
        try:
            self.spec = get_algebra(algebra)
        except (KeyError, ValueError) as e:
            raise UsageError(f"unknown algebra '{algebra}'") from e
        if trials < 1 or structural_trials < 1:
            raise UsageError("trials must be a positive integer")
        self.algebra = algebra
        self.cap = cap
        self.seed = seed
        self.trials = trials
        self.structural_trials = structural_trials
        self.symbolic_suite = dict(symbolic_suite or {})
        self.mutations = dict(mutations or {})
        self.t_sweep = tuple(Fraction(t) for t in t_sweep)
        self.superpotential_t = tuple(Fraction(t) for t in superpotential_t)
        self.min_cap = min_cap
        self.timing = timing
        self.policy = dict(policy or {})

    # ------------------------------------------------------------------
    # Ejecución
    # ------------------------------------------------------------------

    def run(self, suite: str) -> Report:
        """
        Ejecuta una suite y devuelve el reporte.

        Raises:
            UsageError: Suite desconocida o cap insuficiente
        """
        if suite not in SUITES:
            raise UsageError(f"unknown suite '{suite}' (choose from {', '.join(SUITES)})")
        if suite != 'symbolic' and self.cap < self.min_cap:
            raise UsageError(f"cap too small for splitting check (needs ≥ {self.min_cap})")

        logger.info("=" * 80)
        logger.info(f"SUITE {suite.upper()} - álgebra {self.algebra}, cap {self.cap}, "
                    f"semilla {self.seed}, ensayos {self.trials}")
        logger.info("=" * 80)

        checks: List[CheckResult] = []
        if suite in ('symbolic', 'all'):
            checks.extend(self.run_symbolic())
        if suite in ('instance', 'all'):
            checks.extend(self.run_instance())
            checks.extend(self.run_structural())
        if suite in ('mutation', 'all'):
            checks.extend(self.run_mutation())

        report = Report('verify', suite, self.algebra, self.cap, self.seed, self.trials, checks)
        marker = '✓' if report.passed else '✗'
        logger.info(f"{marker} Suite {suite}: {report.n_passed}/{len(checks)} chequeos aprobados")
        return report

    def _record(self, check_id: str, backend: str, fn: Callable[[], Outcome]) -> CheckResult:
        start = time.perf_counter()
        try:
            outcome = fn()
        except Exception as e:
            logger.error(f"✗ {check_id} [{backend}] lanzó {type(e).__name__}: {e}")
            outcome = Outcome(False, certificate=f"{type(e).__name__}: {e}")
        elapsed = time.perf_counter() - start if self.timing else None
        if outcome.passed:
            logger.info(f"✓ {check_id} [{backend}]")
        else:
            logger.warning(f"✗ {check_id} [{backend}]: {outcome.certificate}")
        return CheckResult(check_id, backend, outcome.passed, outcome.valid_order,
                           outcome.certificate, outcome.value, outcome.detail, elapsed)

    def _generator(self, check_id: str, trial: int) -> InstanceGenerator:
        return InstanceGenerator.for_trial(self.spec, self.cap, self.seed, check_id, trial,
                                           **self.policy)

    def _t_values(self, entry: Mapping) -> Tuple[Optional[Fraction], ...]:
        t = entry.get('t')
        if t is None:
            return (None,)
        if t == 'sweep':
            return self.t_sweep
        return tuple(Fraction(v) for v in t)

    # ------------------------------------------------------------------
    # Backend simbólico
    # ------------------------------------------------------------------

    @staticmethod
    def _parse_pairs(pairs: Pairs) -> List[Tuple[dsl.Node, dsl.Node]]:
        return [(dsl.parse(lhs), dsl.parse(rhs)) for lhs, rhs in pairs]

    def _symbolic_outcome(self, entry: Mapping) -> Outcome:
        pairs = self._parse_pairs(entry['pares'])
        t_values = self._t_values(entry)
        for t in t_values:
            for index, (lhs, rhs) in enumerate(pairs, start=1):
                verdict = symdga.verify_identity(lhs, rhs, t)
                if not verdict.passed:
                    where = f"par {index}" if t is None else f"t={t}, par {index}"
                    return Outcome(False, certificate=f"{where}: {verdict.certificate}",
                                   detail=entry.get('descripcion', ''))
        detail = f"{entry.get('descripcion', '')} ({len(pairs)} par(es) x {len(t_values)} valor(es) de t)"
        return Outcome(True, detail=detail)

    def run_symbolic(self) -> List[CheckResult]:
        """Una verificación simbólica por entrada del manifiesto."""
        logger.info("Backend simbólico: álgebra diferencial graduada libre")
        return [self._record(check_id, 'symbolic', lambda e=entry: self._symbolic_outcome(e))
                for check_id, entry in self.symbolic_suite.items()]

    # ------------------------------------------------------------------
    # Backend de instancias
    # ------------------------------------------------------------------

    def _run_trials(self, check_id: str, body: Callable[[InstanceGenerator], Labelled],
                    trials: Optional[int] = None, detail: str = '') -> Outcome:
        trials = trials or self.trials
        orders = []
        for trial in range(trials):
            gen = self._generator(check_id, trial)
            for label, cmp in body(gen):
                if not cmp.passed:
                    return Outcome(False, cmp.valid_order,
                                   f"ensayo {trial}, {label}: {cmp.certificate}", detail=detail)
                if cmp.valid_order is not None:
                    orders.append(cmp.valid_order)
        return Outcome(True, min(orders) if orders else None,
                       detail=f"{detail} ({trials} ensayos)".strip())

    def _pair(self, gen: InstanceGenerator):
        return gen.random_connection(), gen.random_connection()

    def _dual_presentation(self, gen):
        w0, w1 = self._pair(gen)
        yield 'Q = Q_alt', compare_values(transgression(w1, w0), transgression_alt(w1, w0))

    def _antisymmetry(self, gen):
        w0, w1 = self._pair(gen)
        yield 'Q(w1,w0) + Q(w0,w1)', compare_values(transgression(w1, w0) + transgression(w0, w1), 0)

    def _cs_splitting(self, gen):
        w0, w1 = self._pair(gen)
        cmp = compare_values(transgression(w1, w0), splitting_check(w1, w0))
        if cmp.passed and cmp.valid_order < self.cap - 2:
            cmp = Comparison(False, cmp.valid_order, "valid order below cap - 2")
        yield 'Q = CS(w1) - CS(w0) + d tr(w0 w1)', cmp

    def _two_connection_chain(self, gen):
        w0, w1 = self._pair(gen)
        first, *rest = two_connection_chain(w0, w1)
        for k, other in enumerate(rest, start=2):
            yield f"miembro 1 = miembro {k}", compare_values(first, other)

    def _average_bf(self, gen):
        w0, w1 = self._pair(gen)
        yield 'Q = 2 tr(F_barra a + a^3/12)', compare_values(transgression(w1, w0),
                                                              transgression_average(w1, w0))

    def _interpolated_equations(self, gen):
        w0, w1 = self._pair(gen)
        for t in self.t_sweep:
            first, second, third = identity7_check(w0, w1, t)
            yield f"t={t} (1 = 2)", compare_values(first, second)
            yield f"t={t} (1 = 3)", compare_values(first, third)

    def _interpolated_lagrangian(self, gen):
        w0, w1 = self._pair(gen)
        q = transgression(w1, w0)
        for t in self.t_sweep:
            w_t, a = change_variables(w0, w1, t)
            yield f"t={t}", compare_values(q_general(w_t, a, t), q)

    def _change_of_variables(self, gen):
        w0, w1 = self._pair(gen)
        for t in self.t_sweep:
            w_t, a = change_variables(w0, w1, t)
            back0, back1 = inverse_change(w_t, a, t)
            yield f"t={t} inversa w0", compare_values(back0.form, w0.form)
            yield f"t={t} inversa w1", compare_values(back1.form, w1.form)
            yield f"t={t} afín", compare_values(*affine_identity(w0, w1, t))
            yield f"t={t} curvatura", compare_values(*curvature_interpolation(w0, w1, t))

    def _superpotential_gauge(self, gen):
        w0, w1 = self._pair(gen)
        chi = gen.random_lie_matrix()
        base = superpotential_gauge(w1 - w0, chi)
        for t in self.t_sweep:
            w_t, a = change_variables(w0, w1, t)
            back0, back1 = inverse_change(w_t, a, t)
            yield f"t={t} U(a)", compare_values(superpotential_gauge(a, chi), base)
            yield f"t={t} U(w1 - w0)", compare_values(superpotential_gauge(back1 - back0, chi), base)

    def _superpotential_diffeo(self, gen):
        w0, w1 = self._pair(gen)
        xi = gen.random_vector_field()
        values = []
        for t in self.superpotential_t:
            w_t, a = change_variables(w0, w1, t)
            values.append((t, superpotential_diffeo(a, w_t, t, xi)))
        t_ref, ref = values[0]
        for t, value in values[1:]:
            yield f"U_t={t} = U_t={t_ref}", compare_values(value, ref)

    def _gauge_covariance(self, gen):
        w0, w1 = self._pair(gen)
        g = gen.random_group_jet()
        g0, g1 = gauge_transform(g, w0), gauge_transform(g, w1)
        yield 'alfa tensorial', compare_values(g1 - g0, gauge_transform_tensorial(g, w1 - w0))
        yield 'Q invariante', compare_values(transgression(g1, g0), transgression(w1, w0))

    def _pure_gauge_eom(self, check_id: str) -> Outcome:
        """Ecuaciones de movimiento sobre pares pura gauge; exige alfa no nula en algún ensayo."""
        nonzero = 0
        orders = []
        for trial in range(self.trials):
            gen = self._generator(check_id, trial)
            w0, w1, _, _ = gen.pure_gauge_pair()
            if not (w1 - w0).is_zero():
                nonzero += 1
            for t in self.t_sweep:
                w_t, a = change_variables(w0, w1, t)
                residuals = eom_residuals(w_t, a, t)
                if not residuals.vanish():
                    return Outcome(False, residuals.valid_order,
                                   f"ensayo {trial}, t={t}: Omega_t residual {residuals.r_curv}; "
                                   f"D_t alfa residual {residuals.r_cov}")
                orders.append(residuals.valid_order)
            for name, forms in presentation_residuals(w0, w1).items():
                for form in forms:
                    if not form.is_zero():
                        return Outcome(False, form.valid_order,
                                       f"ensayo {trial}, presentación {name}: {form}")
        if nonzero == 0:
            return Outcome(False, certificate="todos los pares tienen alfa = 0 (prueba vacua)")
        return Outcome(True, min(orders),
                       detail=f"{self.trials} pares pura gauge, {nonzero} con alfa no nula")

    def _manifest_soundness(self, check_id: str) -> Outcome:
        """Evalúa cada identidad del manifiesto simbólico sobre instancias concretas."""
        parsed = [(key, self._parse_pairs(entry['pares']), self._t_values(entry))
                  for key, entry in self.symbolic_suite.items()]

        def body(gen):
            w0, w1 = self._pair(gen)
            evaluator = InstanceEvaluator(self.spec, self.cap, {'w0': w0, 'w1': w1})
            for key, pairs, t_values in parsed:
                for t in t_values:
                    current = evaluator if t is None else evaluator.with_t(t)
                    for index, (lhs, rhs) in enumerate(pairs, start=1):
                        label = f"{key} par {index}" + ('' if t is None else f" t={t}")
                        yield label, current.compare(lhs, rhs)

        return self._run_trials(check_id, body, detail=f"{len(parsed)} identidades del manifiesto")

    def run_instance(self) -> List[CheckResult]:
        """Identidades sobre instancias aleatorias."""
        logger.info("Backend de instancias: identidades sobre jets racionales aleatorios")
        bodies = {
            'dual_presentation': (self._dual_presentation, 'Q = Q_alt'),
            'antisymmetry': (self._antisymmetry, 'Q(w1,w0) = -Q(w0,w1)'),
            'cs_splitting': (self._cs_splitting, 'Escisión en Chern-Simons'),
            'two_connection_chain': (self._two_connection_chain, 'Caso de dos conexiones'),
            'average_bf': (self._average_bf, 'Presentación BF'),
            'interpolated_equations': (self._interpolated_equations, 'Identidad general en t'),
            'interpolated_lagrangian': (self._interpolated_lagrangian, 'Lagrangiano en (wt, a)'),
            'change_of_variables': (self._change_of_variables, 'Cambio de variables'),
            'superpotential_gauge': (self._superpotential_gauge, 'U(chi) entre presentaciones'),
            'superpotential_diffeo': (self._superpotential_diffeo, 'U(xi) independiente de t'),
            'gauge_covariance': (self._gauge_covariance, 'Covarianza de gauge de alfa y Q'),
        }
        results = [
            self._record(check_id, 'instance',
                         lambda c=check_id, b=body, d=desc: self._run_trials(c, b, detail=d))
            for check_id, (body, desc) in bodies.items()
        ]
        results.append(self._record('pure_gauge_eom', 'instance',
                                    lambda: self._pure_gauge_eom('pure_gauge_eom')))
        if self.symbolic_suite:
            results.append(self._record('manifest_soundness', 'instance',
                                        lambda: self._manifest_soundness('manifest_soundness')))
        return results

    # ------------------------------------------------------------------
    # Propiedades estructurales
    # ------------------------------------------------------------------

    def _struct_d_squared(self, gen):
        for degree in range(4):
            form = gen.random_form(degree)
            yield f"d(d(A)) grado {degree}", compare_values(exterior_d(exterior_d(form)), 0)

    def _struct_leibniz(self, gen):
        for p, q in ((0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0)):
            A, B = gen.random_form(p), gen.random_form(q)
            lhs = exterior_d(wedge(A, B))
            rhs = wedge(exterior_d(A), B) + wedge(A, exterior_d(B)).scale(_leibniz_sign(p))
            yield f"Leibniz ({p},{q})", compare_values(lhs, rhs)

    def _struct_bianchi(self, gen):
        w = gen.random_connection()
        yield 'D Omega = 0', compare_values(covariant_d(w, curvature(w)), 0)

    def _struct_trace_cyclicity(self, gen):
        for p, q in ((0, 1), (1, 1), (1, 2), (0, 2), (0, 3)):
            A, B = gen.random_form(p), gen.random_form(q)
            rhs = trace(wedge(B, A)).scale(_leibniz_sign(p * q))
            yield f"tr ciclicidad ({p},{q})", compare_values(trace(wedge(A, B)), rhs)

    def _struct_jacobi(self, gen):
        X, Y, Z = (gen.random_lie_matrix() for _ in range(3))
        jacobi = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y))
        yield 'Jacobi', Comparison(jacobi.is_zero(), jacobi.cap, '' if jacobi.is_zero() else repr(jacobi))

    def _struct_contraction(self, gen):
        xi = gen.random_vector_field()
        for p, q in ((1, 1), (1, 2), (2, 1)):
            A, B = gen.random_form(p), gen.random_form(q)
            lhs = contract(xi, wedge(A, B))
            rhs = wedge(contract(xi, A), B) + wedge(A, contract(xi, B)).scale(_leibniz_sign(p))
            yield f"antiderivación ({p},{q})", compare_values(lhs, rhs)

    def _algebra_axioms(self) -> Outcome:
        checks = self.spec.validate()
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            return Outcome(False, certificate=f"{self.spec.name}: falla {', '.join(failed)}")
        return Outcome(True, detail=f"{self.spec.name}: base independiente, cerrada y con Jacobi")

    def run_structural(self) -> List[CheckResult]:
        """d^2 = 0, Leibniz, Bianchi, ciclicidad de la traza, Jacobi y contracción."""
        logger.info("Propiedades estructurales")
        bodies = {
            'struct_d_squared': self._struct_d_squared,
            'struct_leibniz': self._struct_leibniz,
            'struct_bianchi': self._struct_bianchi,
            'struct_trace_cyclicity': self._struct_trace_cyclicity,
            'struct_jacobi': self._struct_jacobi,
            'struct_contraction': self._struct_contraction,
        }
        results = [
            self._record(check_id, 'instance',
                         lambda c=check_id, b=body: self._run_trials(c, b, self.structural_trials))
            for check_id, body in bodies.items()
        ]
        results.append(self._record('struct_algebra_axioms', 'instance', self._algebra_axioms))
        return results

    # ------------------------------------------------------------------
    # Mutaciones
    # ------------------------------------------------------------------

    def _mutation_symbolic(self, entry: Mapping) -> Outcome:
        outcome = self._symbolic_outcome(entry)
        if outcome.passed:
            return Outcome(False, certificate="la mutación pasa simbólicamente (comparación vacua)",
                           detail=entry.get('descripcion', ''))
        return Outcome(True, certificate=outcome.certificate, detail=entry.get('descripcion', ''))

    def _mutation_instance(self, check_id: str, entry: Mapping) -> Outcome:
        pairs = self._parse_pairs(entry['pares'])
        t_values = self._t_values(entry)
        for trial in range(self.trials):
            gen = self._generator(check_id, trial)
            w0, w1 = self._pair(gen)
            evaluator = InstanceEvaluator(self.spec, self.cap, {'w0': w0, 'w1': w1})
            for t in t_values:
                current = evaluator if t is None else evaluator.with_t(t)
                for lhs, rhs in pairs:
                    cmp = current.compare(lhs, rhs)
                    if not cmp.passed:
                        return Outcome(True, cmp.valid_order, cmp.certificate,
                                       detail=f"{entry.get('descripcion', '')} (falla en el ensayo {trial})")
        return Outcome(False, certificate=f"la mutación pasa en {self.trials} ensayos",
                       detail=entry.get('descripcion', ''))

    def run_mutation(self) -> List[CheckResult]:
        """Cada mutación se registra una vez por backend; PASS significa que la mutación falla."""
        logger.info("Sensibilidad a mutaciones")
        results = []
        for check_id, entry in self.mutations.items():
            results.append(self._record(check_id, 'symbolic',
                                        lambda e=entry: self._mutation_symbolic(e)))
            results.append(self._record(check_id, 'instance',
                                        lambda c=check_id, e=entry: self._mutation_instance(c, e)))
        return results


def run_verify(suite: str, seed: int, trials: int, cap: int, algebra: str = 'sl2',
               **options) -> Report:
    """
    Ejecuta una suite de verificación.

    Args:
        suite (str): 'symbolic', 'instance', 'mutation' o 'all'
        seed (int): Semilla raíz
        trials (int): Ensayos por identidad
        cap (int): Cap de jets
        algebra (str): 'sl2' o 'sl3'
        **options: Resto de parámetros de IdentityVerifier

    Returns:
        Report: Reporte con los chequeos ordenados por id

    Raises:
        UsageError: Parámetros inválidos
    """
    verifier = IdentityVerifier(algebra=algebra, cap=cap, seed=seed, trials=trials, **options)
    return verifier.run(suite)
