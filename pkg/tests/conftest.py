import random
from fractions import Fraction
from pathlib import Path

import pytest

from opreduce import ElementColumn, FiniteSequence, Matrix, Polynomial, det

DATA_DIR = Path(__file__).parent / "data"


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_matrix(rng: random.Random, n: int, bound: int = 9) -> Matrix:
    return Matrix(
        tuple(random_rational(rng, bound) for _ in range(n)) for _ in range(n)
    )


def random_nonsingular_matrix(rng: random.Random, n: int, bound: int = 9) -> Matrix:
    while True:
        m = random_matrix(rng, n, bound)
        if det(m) != 0:
            return m


def random_column(rng: random.Random, n: int, bound: int = 9) -> tuple[Fraction, ...]:
    return tuple(random_rational(rng, bound) for _ in range(n))


def random_sequence_column(
    rng: random.Random, n: int, horizon: int, origin: int = 0, bound: int = 9
) -> ElementColumn:
    return ElementColumn(
        FiniteSequence(origin, tuple(random_rational(rng, bound) for _ in range(horizon)))
        for _ in range(n)
    )


def random_polynomial_column(
    rng: random.Random, n: int, max_degree: int = 6, bound: int = 9
) -> ElementColumn:
    return ElementColumn(
        Polynomial(tuple(random_rational(rng, bound) for _ in range(rng.randint(1, max_degree + 1))))
        for _ in range(n)
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240211)
