"""Basic q-numbers and q-deformed occupancy statistics.

The deformation parameter q is an ordinary float carried explicitly
through every call; nothing here restricts it to +-1.
"""
from __future__ import annotations

import math

from .errors import OccupancyPoleError

# |q - 1| below this uses the continuous limit <n> = n (avoids 0/0).
Q_UNITY_TOL = 1e-12

# Pole guard for the occupancy denominator e^x - q.
OCCUPANCY_GUARD = 1e-300


def basic_number(q: float, n: int) -> float:
    """The q-deformation <n> = (q^n - 1)/(q - 1) of the integer n.

    At q = 1 (within Q_UNITY_TOL) returns n, the continuous limit.
    Satisfies <n+1> - q*<n> = 1 and <0> = 0.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if abs(q - 1.0) < Q_UNITY_TOL:
        return float(n)
    return (q ** n - 1.0) / (q - 1.0)


def q_occupancy(x: float, q: float) -> float:
    """Deformed thermal occupancy <n> = 1/(e^x - q), x = h*nu/kT.

    q = 1 reduces to Bose-Einstein, q = -1 to Fermi-Dirac, q = 0 to
    the Boltzmann factor e^(-x).
    """
    denom = math.exp(x) - q
    if abs(denom) < OCCUPANCY_GUARD:
        raise OccupancyPoleError(f"e^x == q at x={x}, q={q}")
    return 1.0 / denom
