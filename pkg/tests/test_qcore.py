import math

import pytest
from hypothesis import given, strategies as st

from qfield.errors import OccupancyPoleError
from qfield.qcore import basic_number, q_occupancy

Q_VALUES = [-1.0, -0.5, 0.3, 1.0, 1.2]


def test_basic_number_examples():
    assert basic_number(1.0, 5) == 5.0
    assert basic_number(2.0, 3) == 7.0
    assert basic_number(0.5, 2) == 1.5
    assert basic_number(0.3, 0) == 0.0


def test_basic_number_limit_branch():
    # within the explicit unity window the continuous limit is returned
    assert basic_number(1.0 + 1e-13, 7) == 7.0


def test_basic_number_negative_n_rejected():
    with pytest.raises(ValueError):
        basic_number(0.5, -1)


@given(st.sampled_from(Q_VALUES), st.integers(min_value=0, max_value=20))
def test_recursion_identity(q, n):
    # <n+1> - q <n> = 1: the identity behind the Fock representation
    assert basic_number(q, n + 1) - q * basic_number(q, n) == pytest.approx(1.0, abs=1e-12)


def test_exact_specializations():
    for n in range(10):
        assert basic_number(1.0, n) == float(n)
        assert basic_number(-1.0, n) == (1 - (-1) ** n) / 2


def test_occupancy_limits():
    assert q_occupancy(math.log(2.0), 1.0) == pytest.approx(1.0, rel=1e-14)
    assert q_occupancy(math.log(3.0), -1.0) == pytest.approx(0.25, rel=1e-14)
    for x in (0.2, 1.0, 3.0):
        assert q_occupancy(x, 0.0) == pytest.approx(math.exp(-x), rel=1e-14)


@given(st.floats(min_value=0.5, max_value=5.0),
       st.sampled_from([-1.0, -0.5, 0.3, 0.9]))
def test_occupancy_ratio_relation(x, q):
    # (1 + q y)/y = e^x with y the occupancy: the deformed Einstein relation
    y = q_occupancy(x, q)
    assert (1.0 + q * y) / y == pytest.approx(math.exp(x), rel=1e-12)


def test_occupancy_pole():
    with pytest.raises(OccupancyPoleError):
        q_occupancy(0.0, 1.0)
