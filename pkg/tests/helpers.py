"""Seeded random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from inframono import CliffordPolynomial, Multivector, monomial_basis


def random_rational(rng: random.Random, span: int = 9, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_multivector(rng: random.Random, m: int, max_terms: int = 4) -> Multivector:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randrange(1 << m)] = random_rational(rng)
    return Multivector(m, terms)


def random_k_vector(rng: random.Random, m: int, grade: int, max_terms: int = 4) -> Multivector:
    masks = [mask for mask in range(1 << m) if bin(mask).count("1") == grade]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(masks)] = random_rational(rng)
    return Multivector(m, terms)


def random_polynomial(
    rng: random.Random,
    m: int,
    degree: int,
    homogeneous: bool = True,
    max_terms: int = 6,
    grade: int | None = None,
) -> CliffordPolynomial:
    if homogeneous:
        monos = monomial_basis(m, degree)
    else:
        monos = [mono for d in range(degree + 1) for mono in monomial_basis(m, d)]
    terms: dict[tuple[int, ...], Multivector] = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = rng.choice(monos)
        if grade is None:
            coeff = random_multivector(rng, m)
        else:
            coeff = random_k_vector(rng, m, grade)
        terms[mono] = terms[mono] + coeff if mono in terms else coeff
    return CliffordPolynomial(m, terms)


def random_scalar_polynomial(
    rng: random.Random, m: int, degree: int, homogeneous: bool = True, max_terms: int = 6
) -> CliffordPolynomial:
    return random_polynomial(rng, m, degree, homogeneous, max_terms, grade=0)
