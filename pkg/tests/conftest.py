from fractions import Fraction

import pytest

from gsv import HighestWeight, Truncation, make_group


@pytest.fixture(scope="session")
def standard():
    """G = Z, alpha = 1/2, natural order."""
    return make_group(1, (), 1)


@pytest.fixture(scope="session")
def dense():
    """G = Z[1/3], alpha = 1/2, natural order."""
    return make_group(1, (3,), 1)


@pytest.fixture(scope="session")
def reversed_standard():
    return make_group(1, (), 1, direction="reversed")


@pytest.fixture(scope="session")
def wide():
    """G = 3Z, alpha = 3/2 (so G and G1 sit further apart)."""
    return make_group(3, (), 1)


@pytest.fixture(scope="session")
def hw_generic():
    return HighestWeight(Fraction(1), Fraction(0))


@pytest.fixture(scope="session")
def hw_degenerate():
    return HighestWeight(Fraction(0), Fraction(2))


@pytest.fixture(scope="session")
def dense_trunc():
    return Truncation(Fraction(3), {3: 2})
