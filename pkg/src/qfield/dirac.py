"""Minkowski kinematics and 4x4 Dirac algebra.

Metric signature (+,-,-,-), natural units.  Gamma matrices in the Dirac
representation, so rest-frame projectors come out diagonal.  Spinors are
normalized to ubar u = 1 / vbar v = -1, which makes the spin sums equal
the energy projectors (+-m + pslash)/2m exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import (OffShellError, SuperluminalError, ZeroMassError,
                     ZeroVectorError)

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

_SIGMA = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]

_ZERO2 = np.zeros((2, 2), dtype=complex)
_ID2 = np.eye(2, dtype=complex)

_GAMMA = np.empty((4, 4, 4), dtype=complex)
_GAMMA[0] = np.block([[_ID2, _ZERO2], [_ZERO2, -_ID2]])
for _i in range(3):
    _GAMMA[_i + 1] = np.block([[_ZERO2, _SIGMA[_i]], [-_SIGMA[_i], _ZERO2]])

# Charge conjugation matrix, C = i gamma^2 gamma^0.
C_MATRIX = 1j * _GAMMA[2] @ _GAMMA[0]

ONSHELL_RTOL = 1e-10


def gamma(mu: int) -> np.ndarray:
    """Dirac-representation gamma matrix, mu in 0..3."""
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"mu must be 0..3, got {mu}")
    return _GAMMA[mu].copy()


def minkowski_dot(p, k) -> float:
    p = np.asarray(p)
    k = np.asarray(k)
    return p[0] * k[0] - p[1] * k[1] - p[2] * k[2] - p[3] * k[3]


def mass2(p) -> float:
    return minkowski_dot(p, p)


def slash(p) -> np.ndarray:
    """pslash = gamma^mu p_mu for contravariant components p."""
    p = np.asarray(p)
    return (p[0] * _GAMMA[0] - p[1] * _GAMMA[1]
            - p[2] * _GAMMA[2] - p[3] * _GAMMA[3])


def onshell_momentum(pvec, m: float) -> np.ndarray:
    """Four-momentum with p0 = +sqrt(|pvec|^2 + m^2)."""
    pvec = np.asarray(pvec, dtype=float)
    p0 = np.sqrt(float(pvec @ pvec) + m * m)
    return np.array([p0, *pvec])


def _check_onshell(p, m: float):
    dev = abs(mass2(p) - m * m)
    scale = max(1.0, abs(m * m), float(np.asarray(p)[0]) ** 2)
    if dev > ONSHELL_RTOL * scale:
        raise OffShellError(f"p^2 - m^2 = {mass2(p) - m * m} for m = {m}")
    if np.asarray(p)[0] <= 0:
        raise OffShellError("p0 must be positive")


@dataclass
class DiracSpinor:
    components: np.ndarray
    momentum: np.ndarray
    r: int
    kind: str  # "u" or "v"

    def bar(self) -> np.ndarray:
        """Dirac adjoint row vector ubar = u^dagger gamma^0."""
        return self.components.conj() @ _GAMMA[0]


_CHI = [np.array([1.0, 0.0], dtype=complex),
        np.array([0.0, 1.0], dtype=complex)]


def u_spinor(p, r: int, m: float) -> DiracSpinor:
    """Positive-energy on-shell spinor, ubar u = 1."""
    p = np.asarray(p, dtype=float)
    _check_spin(r)
    _check_mass(m)
    _check_onshell(p, m)
    E = p[0]
    sigma_p = sum(p[i + 1] * _SIGMA[i] for i in range(3))
    norm = np.sqrt((E + m) / (2 * m))
    chi = _CHI[r - 1]
    comps = norm * np.concatenate([chi, (sigma_p / (E + m)) @ chi])
    return DiracSpinor(comps, p, r, "u")


def v_spinor(p, r: int, m: float) -> DiracSpinor:
    """Negative-energy on-shell spinor, vbar v = -1."""
    p = np.asarray(p, dtype=float)
    _check_spin(r)
    _check_mass(m)
    _check_onshell(p, m)
    E = p[0]
    sigma_p = sum(p[i + 1] * _SIGMA[i] for i in range(3))
    norm = np.sqrt((E + m) / (2 * m))
    chi = _CHI[r - 1]
    comps = norm * np.concatenate([(sigma_p / (E + m)) @ chi, chi])
    return DiracSpinor(comps, p, r, "v")


def charge_conjugate_spinor(s: DiracSpinor) -> DiracSpinor:
    """Map u -> v (and v -> u) via C (gamma^0)^T conj.

    Double application returns the original spinor exactly
    (C (gamma^0)^T conj squares to the identity with C = i gamma^2 gamma^0).
    """
    comps = C_MATRIX @ _GAMMA[0].T @ s.components.conj()
    kind = "v" if s.kind == "u" else "u"
    return DiracSpinor(comps, s.momentum, s.r, kind)


def theta_projector(p, sign: int, m: float) -> np.ndarray:
    """Energy projector (+-m + pslash)/2m; equals the u/v spin sums."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    _check_mass(m)
    p = np.asarray(p, dtype=float)
    _check_onshell(p, m)
    return (sign * m * np.eye(4) + slash(p)) / (2 * m)


def spin_sum(p, m: float, kind: str = "u") -> np.ndarray:
    """Sum_r u ubar (or v vbar) assembled from explicit spinors."""
    build = u_spinor if kind == "u" else v_spinor
    total = np.zeros((4, 4), dtype=complex)
    for r in (1, 2):
        s = build(p, r, m)
        total += np.outer(s.components, s.bar())
    return total


def polarization_vectors(p, m: float) -> list:
    """Three massive polarization four-vectors: e.p = 0, orthonormal."""
    _check_mass(m)
    p = np.asarray(p, dtype=float)
    _check_onshell(p, m)
    pvec = p[1:]
    pmag = np.linalg.norm(pvec)
    if pmag < 1e-14:
        return [np.array([0.0, 1, 0, 0]), np.array([0.0, 0, 1, 0]),
                np.array([0.0, 0, 0, 1])]
    phat = pvec / pmag
    trial = np.array([1.0, 0, 0]) if abs(phat[0]) < 0.9 else np.array([0.0, 1, 0])
    t1 = np.cross(phat, trial)
    t1 /= np.linalg.norm(t1)
    t2 = np.cross(phat, t1)
    longitudinal = np.array([pmag / m, *(p[0] / m * phat)])
    return [np.array([0.0, *t1]), np.array([0.0, *t2]), longitudinal]


def polarization_sum(p, m: float) -> np.ndarray:
    """Sum_r e^alpha e^beta over the explicit massive basis.

    Equals -g + p p / m^2 in this metric; see the closed-form helper.
    """
    vecs = polarization_vectors(p, m)
    return sum(np.outer(e, e) for e in vecs)


def polarization_sum_closed_form(p, m: float) -> np.ndarray:
    """-g^{ab} + p^a p^b / m^2: what the explicit basis sums to."""
    _check_mass(m)
    p = np.asarray(p, dtype=float)
    return -METRIC + np.outer(p, p) / (m * m)


def transverse_projector(kvec) -> np.ndarray:
    """Momentum-space transverse projector delta_ij - k_i k_j / k^2."""
    kvec = np.asarray(kvec, dtype=float)
    k2 = float(kvec @ kvec)
    if k2 <= 0.0:
        raise ZeroVectorError("need |k| > 0")
    return np.eye(3) - np.outer(kvec, kvec) / k2


def boost_matrix(beta) -> np.ndarray:
    """4x4 Lorentz boost with velocity beta; takes (m,0) to (gamma m, gamma m beta)."""
    beta = np.asarray(beta, dtype=float)
    b2 = float(beta @ beta)
    if b2 >= 1.0:
        raise SuperluminalError(f"|beta| = {np.sqrt(b2)} >= 1")
    if b2 == 0.0:
        return np.eye(4)
    g = 1.0 / np.sqrt(1.0 - b2)
    L = np.eye(4)
    L[0, 0] = g
    L[0, 1:] = g * beta
    L[1:, 0] = g * beta
    L[1:, 1:] += (g - 1.0) / b2 * np.outer(beta, beta)
    return L


def spinor_boost_matrix(beta) -> np.ndarray:
    """Spinor representation S of the boost: S^-1 gamma^mu S = L^mu_nu gamma^nu."""
    beta = np.asarray(beta, dtype=float)
    b = np.linalg.norm(beta)
    if b >= 1.0:
        raise SuperluminalError(f"|beta| = {b} >= 1")
    if b == 0.0:
        return np.eye(4, dtype=complex)
    eta = np.arctanh(b)
    nhat = beta / b
    alpha_n = sum(nhat[i] * (_GAMMA[0] @ _GAMMA[i + 1]) for i in range(3))
    return expm(0.5 * eta * alpha_n)


def _check_spin(r: int):
    if r not in (1, 2):
        raise ValueError(f"spin index must be 1 or 2, got {r}")


def _check_mass(m: float):
    if m <= 0.0:
        raise ZeroMassError(f"need m > 0, got {m}")
