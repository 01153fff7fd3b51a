"""Seeded random elements for the randomized identity checks."""
import random
from fractions import Fraction
from typing import List

from algebra.cyclo import CycScalar, field_degree
from algebra.elements import AlgebraElement, MonomialAlgebra

SMALL_FRACTIONS = [Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3) if n]


def random_scalar(N: int, rng: random.Random, spread: int = 2) -> CycScalar:
    """A scalar with at most `spread` nonzero small rational coordinates in the power basis of q."""
    degree = field_degree(N)
    coefficients: List[Fraction] = [Fraction(0)] * degree
    for index in rng.sample(range(degree), min(spread, degree)):
        coefficients[index] = rng.choice(SMALL_FRACTIONS)
    return CycScalar.from_coefficients(N, coefficients)


def random_element(algebra: MonomialAlgebra, rng: random.Random, terms: int = 4) -> AlgebraElement:
    """A sum of `terms` distinct basis monomials with random nonzero coefficients."""
    basis = algebra.basis()
    chosen = rng.sample(basis, min(terms, len(basis)))
    return algebra.element({m: random_scalar(algebra.N, rng) for m in chosen})


def random_elements(algebra: MonomialAlgebra, rng: random.Random, count: int, terms: int = 4) -> List[AlgebraElement]:
    return [random_element(algebra, rng, terms) for _ in range(count)]
