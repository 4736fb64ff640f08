"""Shared fixtures and helpers for the test suite."""

import random

import pytest

from phopf.fields import GF, QQ
from phopf.algebras import sweedler_h4


@pytest.fixture(scope="session")
def h4():
    return sweedler_h4(QQ)


@pytest.fixture(scope="session")
def h4_gf5():
    return sweedler_h4(GF(5))


@pytest.fixture
def rng():
    return random.Random(20260815)


def rand_fraction(rng, lo=-6, hi=7, den=4):
    from fractions import Fraction
    return Fraction(rng.randrange(lo, hi), rng.randrange(1, den + 1))
