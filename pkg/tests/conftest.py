from fractions import Fraction

import pytest

from sdreal.rationals import Rat

# rationals exercised by most semantic-agreement checks
GRID = [
    Rat(-1),
    Rat(-2, 3),
    Rat(-1, 2),
    Rat(-1, 4),
    Rat(0),
    Rat(1, 4),
    Rat(1, 3),
    Rat(1, 2),
    Rat(1),
]


@pytest.fixture(scope="session")
def grid():
    return GRID


def to_rat(f: Fraction):
    return Rat(f.numerator, f.denominator)


def within(a, b, n):
    """|a - b| <= 2^-n for exact rationals."""
    return abs(a - b) * 2**n <= 1
