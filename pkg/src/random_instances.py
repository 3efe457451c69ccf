"""
Módulo de generación de instancias aleatorias reproducibles.

Política de coeficientes: racionales con numerador en [-3, 3] y
denominador en {1, 2, 3}, con densidad ~50% de los monomios admisibles.
Cada (semilla, flujo, ensayo) tiene su propio generador numpy, de modo que
los ensayos son independientes del orden de ejecución.

Autor: Sistema de Verificación Chern-Simons/BF
Fecha: Octubre 2026
"""

import logging
import zlib
from fractions import Fraction
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np

from .forms import BASIS_BY_DEGREE, GForm, VectorFieldSym
from .gauge import Connection, GroupJet, flat_connection
from .jets import Jet, Monomial
from .liealg import LieAlgebraSpec, LieMatrix, from_coefficients

# Configurar logging
logger = logging.getLogger(__name__)

NUMERATORS = tuple(range(-3, 4))
DENOMINATORS = (1, 2, 3)
DENSITY = 0.5


def stream_id(name: str) -> int:
    """Identificador estable de flujo a partir del id de un chequeo."""
    return zlib.crc32(name.encode('utf-8'))


def make_rng(seed: int, stream: int = 0, trial: int = 0) -> np.random.Generator:
    """Generador independiente para (semilla, flujo, ensayo)."""
    return np.random.default_rng(np.random.SeedSequence([seed, stream, trial]))


def monomials_up_to(cap: int) -> List[Monomial]:
    """Multi-índices de grado total <= cap en orden fijo."""
    return [m for m in product(range(cap + 1), repeat=3) if sum(m) <= cap]


class InstanceGenerator:
    """
    Generador de jets, matrices del álgebra, formas y conexiones aleatorias.
    """

    def __init__(self, spec: LieAlgebraSpec, cap: int, rng: np.random.Generator,
                 numerators: Sequence[int] = NUMERATORS,
                 denominators: Sequence[int] = DENOMINATORS,
                 density: float = DENSITY):
        """
        Inicializa el generador.

        Args:
            spec (LieAlgebraSpec): Álgebra de los valores matriciales
            cap (int): Cap de los jets generados
            rng (np.random.Generator): Fuente de aleatoriedad
            numerators (Sequence[int]): Numeradores admisibles
            denominators (Sequence[int]): Denominadores admisibles
            density (float): Probabilidad de que un monomio esté presente
        """
        self.spec = spec
        self.cap = cap
        self.rng = rng
        self.numerators = tuple(numerators)
        self.denominators = tuple(denominators)
        self.density = density
        self._monomials = monomials_up_to(cap)

    @classmethod
    def for_trial(cls, spec: LieAlgebraSpec, cap: int, seed: int, check_id: str,
                  trial: int, **policy) -> 'InstanceGenerator':
        return cls(spec, cap, make_rng(seed, stream_id(check_id), trial), **policy)

    def random_fraction(self) -> Fraction:
        num = int(self.rng.choice(self.numerators))
        den = int(self.rng.choice(self.denominators))
        return Fraction(num, den)

    def random_jet(self, zero_constant: bool = False) -> Jet:
        """Jet con ~density de los monomios admisibles presentes."""
        terms = {}
        for mono in self._monomials:
            if zero_constant and sum(mono) == 0:
                continue
            if self.rng.random() < self.density:
                terms[mono] = self.random_fraction()
        return Jet(terms, self.cap)

    def random_lie_matrix(self, zero_constant: bool = False) -> LieMatrix:
        coeffs = [self.random_jet(zero_constant) for _ in range(self.spec.dim)]
        return from_coefficients(self.spec, coeffs, self.cap)

    def random_form(self, degree: int) -> GForm:
        """GForm aleatoria de grado dado con orden válido igual al cap."""
        comps = {key: self.random_lie_matrix() for key in BASIS_BY_DEGREE[degree]}
        return GForm(degree, comps, self.cap, self.spec.matrix_size)

    def random_connection(self) -> Connection:
        return Connection(self.random_form(1))

    def random_group_jet(self) -> GroupJet:
        """g = I + N con N del álgebra sin término constante (siempre invertible)."""
        return GroupJet.near_identity(self.random_lie_matrix(zero_constant=True))

    def random_vector_field(self) -> VectorFieldSym:
        return VectorFieldSym(tuple(self.random_jet() for _ in range(3)))

    def pure_gauge_pair(self) -> Tuple[Connection, Connection, GroupJet, GroupJet]:
        """
        Par de conexiones planas omega0 = g^-1 dg, omega1 = h^-1 dh.

        Returns:
            Tuple: (omega0, omega1, g, h)
        """
        g = self.random_group_jet()
        h = self.random_group_jet()
        return flat_connection(g), flat_connection(h), g, h
