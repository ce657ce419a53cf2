"""Tree-level QED probes of the q-deformed propagators.

Moller scattering with a q-corrected photon exchange, e+ e- -> 2 gamma
with a q-corrected internal electron line, and boost scans exhibiting
the frame dependence of the correction factors.

The correction factors multiply the usual 1/(transfer)^2 denominators:

    photon line:    F = (1/2) [ (1+q) + (1-q) (E_in - E_out)/|dpvec| ]
    electron line:  F = (1/2) [ (1-q) + (1+q) (E_in - E_out)/|dpvec| ]

written as half-sums so q = -+1 needs no special-casing.  Energies and
3-momenta are taken in the current working frame, which is exactly what
makes the factors frame dependent for q != 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .dirac import (boost_matrix, gamma, mass2, minkowski_dot,
                    u_spinor, DiracSpinor)
from .errors import DegenerateTransferError, OffShellError, SuperluminalError

PHOTON_LINE = "photon_line"
ELECTRON_LINE = "electron_line"

ONSHELL_RTOL = 1e-10
TRANSFER_GUARD = 1e-12


@dataclass
class Boost:
    beta: np.ndarray

    def __post_init__(self):
        self.beta = np.asarray(self.beta, dtype=float)
        if float(self.beta @ self.beta) >= 1.0:
            raise SuperluminalError(f"|beta| >= 1: {self.beta}")

    @property
    def gamma_factor(self) -> float:
        return 1.0 / np.sqrt(1.0 - float(self.beta @ self.beta))


def boost(p, b: Boost) -> np.ndarray:
    """Boost a four-vector; preserves the invariant mass."""
    return boost_matrix(b.beta) @ np.asarray(p, dtype=float)


@dataclass
class ProcessKinematics:
    """2 -> 2 kinematics with per-leg masses, validated on construction."""

    incoming: tuple
    outgoing: tuple
    masses: tuple  # (mA, mB, mC, mD)

    def __post_init__(self):
        self.incoming = tuple(np.asarray(p, dtype=float) for p in self.incoming)
        self.outgoing = tuple(np.asarray(p, dtype=float) for p in self.outgoing)
        legs = self.incoming + self.outgoing
        for p, m in zip(legs, self.masses):
            scale = max(1.0, p[0] ** 2)
            if abs(mass2(p) - m * m) > ONSHELL_RTOL * scale:
                raise OffShellError(f"leg {p} not on shell for m={m}")
        total = sum(self.incoming) - sum(self.outgoing)
        if np.max(np.abs(total)) > ONSHELL_RTOL * max(1.0, legs[0][0]):
            raise OffShellError(f"4-momentum not conserved: {total}")

    def boosted(self, b: Boost) -> "ProcessKinematics":
        return ProcessKinematics(
            tuple(boost(p, b) for p in self.incoming),
            tuple(boost(p, b) for p in self.outgoing),
            self.masses)


def cm_elastic_kinematics(energy: float, theta: float, m: float,
                          phi: float = 0.0) -> ProcessKinematics:
    """Equal-mass elastic scattering in the CM frame along z, scatter by theta."""
    if energy <= m:
        raise ValueError("need E > m")
    pmag = np.sqrt(energy ** 2 - m ** 2)
    nhat = np.array([np.sin(theta) * np.cos(phi),
                     np.sin(theta) * np.sin(phi), np.cos(theta)])
    pA = np.array([energy, 0.0, 0.0, pmag])
    pB = np.array([energy, 0.0, 0.0, -pmag])
    pC = np.array([energy, *(pmag * nhat)])
    pD = np.array([energy, *(-pmag * nhat)])
    return ProcessKinematics((pA, pB), (pC, pD), (m, m, m, m))


def cm_annihilation_kinematics(energy: float, theta: float, m: float,
                               phi: float = 0.0) -> ProcessKinematics:
    """e+ e- -> gamma gamma in the CM frame: massive in, massless out."""
    if energy <= m:
        raise ValueError("need E > m")
    pmag = np.sqrt(energy ** 2 - m ** 2)
    nhat = np.array([np.sin(theta) * np.cos(phi),
                     np.sin(theta) * np.sin(phi), np.cos(theta)])
    pplus = np.array([energy, 0.0, 0.0, pmag])
    pminus = np.array([energy, 0.0, 0.0, -pmag])
    k1 = np.array([energy, *(energy * nhat)])
    k2 = np.array([energy, *(-energy * nhat)])
    return ProcessKinematics((pplus, pminus), (k1, k2), (m, m, 0.0, 0.0))


def correction_factor(E_in: float, E_out: float, pvec_in, pvec_out,
                      q: float, flavor: str) -> float:
    """q-dependent multiplicative factor on an internal line (see module doc)."""
    pvec_in = np.asarray(pvec_in, dtype=float)
    pvec_out = np.asarray(pvec_out, dtype=float)
    dp = float(np.linalg.norm(pvec_in - pvec_out))
    if dp <= TRANSFER_GUARD:
        raise DegenerateTransferError("vanishing 3-momentum transfer")
    ratio = (E_in - E_out) / dp
    if flavor == PHOTON_LINE:
        return 0.5 * ((1.0 + q) + (1.0 - q) * ratio)
    if flavor == ELECTRON_LINE:
        return 0.5 * ((1.0 - q) + (1.0 + q) * ratio)
    raise ValueError(f"unknown flavor {flavor!r}")


def current_matrix_element(out: DiracSpinor, inc: DiracSpinor,
                           mu: int) -> complex:
    """Spinor bilinear ubar_out gamma^mu u_in."""
    return complex(out.bar() @ gamma(mu) @ inc.components)


def current_four_vector(out: DiracSpinor, inc: DiracSpinor) -> np.ndarray:
    return np.array([current_matrix_element(out, inc, mu) for mu in range(4)])


def moller_amplitude(kin: ProcessKinematics, spins: tuple, q: float,
                     strict_paper_mode: bool = False) -> complex:
    """Tree Moller amplitude with q-corrected photon exchanges.

    M = q [ J_CA . J_DB * F_CA / t_CA  -  J_DA . J_CB * F_DA / t_DA ]
    with t the squared 4-momentum transfer.  ``strict_paper_mode``
    switches the exchange denominator to the literal (P_B - P_A)^2
    reading instead of (P_D - P_A)^2.
    """
    pA, pB = kin.incoming
    pC, pD = kin.outgoing
    m = kin.masses[0]
    rA, rB, rC, rD = spins
    uA, uB = u_spinor(pA, rA, m), u_spinor(pB, rB, m)
    uC, uD = u_spinor(pC, rC, m), u_spinor(pD, rD, m)

    t_direct = mass2(pC - pA)
    t_exchange = mass2(pB - pA) if strict_paper_mode else mass2(pD - pA)
    if abs(t_direct) <= TRANSFER_GUARD or abs(t_exchange) <= TRANSFER_GUARD:
        raise DegenerateTransferError("vanishing squared 4-momentum transfer")

    F_CA = correction_factor(pA[0], pC[0], pA[1:], pC[1:], q, PHOTON_LINE)
    F_DA = correction_factor(pA[0], pD[0], pA[1:], pD[1:], q, PHOTON_LINE)

    J_CA = current_four_vector(uC, uA)
    J_DB = current_four_vector(uD, uB)
    J_DA = current_four_vector(uD, uA)
    J_CB = current_four_vector(uC, uB)

    direct = minkowski_dot(J_CA, J_DB) * F_CA / t_direct
    exchange = minkowski_dot(J_DA, J_CB) * F_DA / t_exchange
    return q * (direct - exchange)


def moller_spin_summed(kin: ProcessKinematics, q: float,
                       strict_paper_mode: bool = False) -> float:
    """Sum of |M|^2 over the 16 spin assignments (no phase space)."""
    total = 0.0
    for spins in product((1, 2), repeat=4):
        total += abs(moller_amplitude(kin, spins, q, strict_paper_mode)) ** 2
    return total


def annihilation_correction_pair(kin: ProcessKinematics, q: float) -> tuple:
    """Electron-line correction factors for the two annihilation diagrams.

    In the CM frame both reduce to (1-q)/2 for any q.
    """
    pplus = kin.incoming[0]
    k1, k2 = kin.outgoing
    f1 = correction_factor(pplus[0], k1[0], pplus[1:], k1[1:], q, ELECTRON_LINE)
    f2 = correction_factor(pplus[0], k2[0], pplus[1:], k2[1:], q, ELECTRON_LINE)
    return f1, f2


def frame_scan(kin: ProcessKinematics, q: float, boosts: list,
               flavor: str = PHOTON_LINE) -> list:
    """Correction factors for each boosted frame.

    Rows (beta, F1, F2) in input order: (F_CA, F_DA) for the photon
    line, the two annihilation factors for the electron line.
    """
    rows = []
    for b in boosts:
        kb = kin.boosted(b)
        if flavor == PHOTON_LINE:
            pA = kb.incoming[0]
            pC, pD = kb.outgoing
            f1 = correction_factor(pA[0], pC[0], pA[1:], pC[1:], q, PHOTON_LINE)
            f2 = correction_factor(pA[0], pD[0], pA[1:], pD[1:], q, PHOTON_LINE)
        elif flavor == ELECTRON_LINE:
            f1, f2 = annihilation_correction_pair(kb, q)
        else:
            raise ValueError(f"unknown flavor {flavor!r}")
        rows.append((np.asarray(b.beta, dtype=float), f1, f2))
    return rows
