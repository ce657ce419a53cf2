from itertools import product

import numpy as np
import pytest

from qfield import dirac, scattering as sc
from qfield.errors import (DegenerateTransferError, OffShellError,
                           SuperluminalError)

M = 1.0


def generic_kinematics():
    return sc.cm_elastic_kinematics(2.0, 1.0, M)


def test_boost_examples():
    p = np.array([M, 0.0, 0.0, 0.0])
    assert np.allclose(sc.boost(p, sc.Boost([0.0, 0.0, 0.0])), p)
    beta = 0.6
    g = 1.0 / np.sqrt(1 - beta ** 2)
    boosted = sc.boost(p, sc.Boost([0.0, 0.0, beta]))
    assert boosted[0] == pytest.approx(g * M, rel=1e-12)
    assert boosted[3] == pytest.approx(g * M * beta, rel=1e-12)
    q = np.array([2.0, 0.3, -0.7, 1.1])
    b = sc.Boost([0.2, -0.4, 0.1])
    assert dirac.mass2(sc.boost(q, b)) == pytest.approx(dirac.mass2(q), abs=1e-12)


def test_boost_superluminal():
    with pytest.raises(SuperluminalError):
        sc.Boost([0.0, 0.0, 1.0])


def test_boost_composition_along_axis():
    b1, b2 = 0.3, 0.4
    combined = (b1 + b2) / (1 + b1 * b2)
    p = np.array([M, 0.0, 0.0, 0.0])
    two_step = sc.boost(sc.boost(p, sc.Boost([0, 0, b1])), sc.Boost([0, 0, b2]))
    one_step = sc.boost(p, sc.Boost([0, 0, combined]))
    assert np.allclose(two_step, one_step, atol=1e-12)


def test_kinematics_validation():
    kin = generic_kinematics()
    for p, m in zip(kin.incoming + kin.outgoing, kin.masses):
        assert abs(dirac.mass2(p) - m * m) <= 1e-10 * max(1.0, p[0] ** 2)
    with pytest.raises(OffShellError):
        sc.ProcessKinematics(
            (np.array([2.0, 0, 0, 0.5]), np.array([2.0, 0, 0, -0.5])),
            (np.array([2.0, 0, 0, 0.5]), np.array([2.0, 0, 0, -0.5])),
            (M, M, M, M))


def test_correction_factor_photon_q1():
    assert sc.correction_factor(3.0, 2.0, [1, 0, 0], [0, 1, 0], 1.0,
                                sc.PHOTON_LINE) == pytest.approx(1.0)


def test_correction_factor_elastic_cm():
    # equal energies: F = (1+q)/2 regardless of directions
    for q in (0.3, -0.5, 1.2):
        f = sc.correction_factor(2.0, 2.0, [1, 0, 0], [0, 0, 1], q,
                                 sc.PHOTON_LINE)
        assert f == pytest.approx((1 + q) / 2, abs=1e-14)


def test_correction_factor_numeric_example():
    # (E_in - E_out)/|dp| = 0.2 at q = 0.5: 0.75 + 0.25*0.2 = 0.80
    f = sc.correction_factor(1.2, 1.0, [1.0, 0, 0], [0.0, 0, 0], 0.5,
                             sc.PHOTON_LINE)
    assert f == pytest.approx(0.80, abs=1e-14)


def test_correction_factor_electron_line_swaps_combinations():
    f = sc.correction_factor(2.0, 2.0, [1, 0, 0], [0, 0, 1], 0.5,
                             sc.ELECTRON_LINE)
    assert f == pytest.approx((1 - 0.5) / 2, abs=1e-14)


def test_correction_factor_degenerate():
    with pytest.raises(DegenerateTransferError):
        sc.correction_factor(1.0, 1.0, [1, 0, 0], [1, 0, 0], 0.5,
                             sc.PHOTON_LINE)


def test_current_matrix_element_basics():
    p = dirac.onshell_momentum([0.4, -0.2, 0.9], M)
    u = dirac.u_spinor(p, 1, M)
    j0 = sc.current_matrix_element(u, u, 0)
    assert j0.imag == pytest.approx(0.0, abs=1e-12)
    assert j0.real > 0
    udag_u = complex(u.components.conj() @ u.components)
    assert j0 == pytest.approx(udag_u, abs=1e-12)


def test_current_conservation():
    kin = generic_kinematics()
    pA, _ = kin.incoming
    pC, _ = kin.outgoing
    k = pC - pA
    for rA, rC in product((1, 2), repeat=2):
        uA = dirac.u_spinor(pA, rA, M)
        uC = dirac.u_spinor(pC, rC, M)
        J = sc.current_four_vector(uC, uA)
        assert abs(dirac.minkowski_dot(k, J)) <= 1e-10


def test_current_rest_frame_hand_check():
    # both spinors at rest: J^mu = (delta_{r r'}, 0, 0, 0) since the
    # lower components vanish in the Dirac representation
    rest = np.array([M, 0.0, 0.0, 0.0])
    u1 = dirac.u_spinor(rest, 1, M)
    u2 = dirac.u_spinor(rest, 2, M)
    assert sc.current_matrix_element(u1, u1, 0) == pytest.approx(1.0)
    assert sc.current_matrix_element(u2, u1, 0) == pytest.approx(0.0, abs=1e-14)
    for mu in (1, 2, 3):
        assert sc.current_matrix_element(u1, u1, mu) == pytest.approx(0.0, abs=1e-14)


def textbook_moller(kin, spins):
    pA, pB = kin.incoming
    pC, pD = kin.outgoing
    rA, rB, rC, rD = spins
    uA = dirac.u_spinor(pA, rA, M)
    uB = dirac.u_spinor(pB, rB, M)
    uC = dirac.u_spinor(pC, rC, M)
    uD = dirac.u_spinor(pD, rD, M)
    direct = dirac.minkowski_dot(sc.current_four_vector(uC, uA),
                                 sc.current_four_vector(uD, uB))
    exchange = dirac.minkowski_dot(sc.current_four_vector(uD, uA),
                                   sc.current_four_vector(uC, uB))
    return direct / dirac.mass2(pC - pA) - exchange / dirac.mass2(pD - pA)


def test_moller_q1_is_textbook_direct_minus_exchange():
    kin = generic_kinematics()
    for spins in product((1, 2), repeat=4):
        got = sc.moller_amplitude(kin, spins, 1.0)
        assert got == pytest.approx(textbook_moller(kin, spins), abs=1e-12)


def test_moller_bracket_antisymmetry():
    kin = generic_kinematics()
    swapped = sc.ProcessKinematics(kin.incoming, kin.outgoing[::-1], kin.masses)
    q = 0.5
    for spins in [(1, 1, 1, 1), (1, 2, 1, 2), (2, 1, 1, 2)]:
        m1 = sc.moller_amplitude(kin, spins, q)
        rC, rD = spins[2], spins[3]
        m2 = sc.moller_amplitude(swapped, (spins[0], spins[1], rD, rC), q)
        assert m1 == pytest.approx(-m2, abs=1e-12)


def test_moller_cm_elastic_factorizes():
    # in CM both F factors are (1+q)/2, so M(q) = q (1+q)/2 * M(1)
    kin = generic_kinematics()
    spins = (1, 2, 1, 2)
    base = sc.moller_amplitude(kin, spins, 1.0)
    for q in (0.3, -0.5, 1.2):
        got = sc.moller_amplitude(kin, spins, q)
        assert got == pytest.approx(q * (1 + q) / 2 * base, abs=1e-12)


def test_moller_strict_paper_mode_changes_exchange_denominator():
    kin = generic_kinematics()
    spins = (1, 1, 1, 1)
    loose = sc.moller_amplitude(kin, spins, 0.5, strict_paper_mode=False)
    strict = sc.moller_amplitude(kin, spins, 0.5, strict_paper_mode=True)
    assert loose != pytest.approx(strict)


def test_moller_spin_summed_positive():
    kin = generic_kinematics()
    assert sc.moller_spin_summed(kin, 1.0) > 0.0


def test_annihilation_cm_factors():
    kin = sc.cm_annihilation_kinematics(2.0, 1.0, M)
    for q in (0.3, -0.5, 1.2):
        f1, f2 = sc.annihilation_correction_pair(kin, q)
        assert f1 == pytest.approx((1 - q) / 2, abs=1e-12)
        assert f2 == pytest.approx((1 - q) / 2, abs=1e-12)
    # q = -1: undeformed fermionic limit
    f1, f2 = sc.annihilation_correction_pair(kin, -1.0)
    assert f1 == pytest.approx(1.0) and f2 == pytest.approx(1.0)


def test_annihilation_boosted_factors_split():
    kin = sc.cm_annihilation_kinematics(2.0, 1.0, M)
    kb = kin.boosted(sc.Boost([0.0, 0.0, 0.5]))
    f1, f2 = sc.annihilation_correction_pair(kb, 0.5)
    assert abs(f1 - f2) > 1e-3


def test_frame_scan_q1_invariant():
    kin = generic_kinematics()
    betas = [sc.Boost([0, 0, b]) for b in (0.0, 0.25, 0.5, -0.5)]
    rows = sc.frame_scan(kin, 1.0, betas)
    values = [f for _, f1, f2 in rows for f in (f1, f2)]
    assert max(values) - min(values) <= 1e-12
    assert values[0] == pytest.approx(1.0, abs=1e-12)


def test_frame_scan_q_half_golden_deviation():
    # golden value frozen from the harness: F_CA at q=0.5, beta=0.5z
    kin = generic_kinematics()
    rows = sc.frame_scan(kin, 0.5, [sc.Boost([0, 0, 0]), sc.Boost([0, 0, 0.5])])
    assert rows[0][1] == pytest.approx(0.75, abs=1e-14)
    assert rows[1][1] == pytest.approx(0.816691436854859, abs=1e-12)
    assert abs(rows[1][1] - 0.75) > 0.01


def test_frame_scan_reflection_symmetry():
    # all momenta lie in the x-z plane, so reflecting y -> -y maps the
    # boost to its negative while fixing the kinematics: F must agree
    kin = sc.cm_elastic_kinematics(2.0, np.pi / 2, M)
    rows = sc.frame_scan(kin, 0.5, [sc.Boost([0, 0.4, 0]), sc.Boost([0, -0.4, 0])])
    assert rows[0][1] == pytest.approx(rows[1][1], abs=1e-12)
    assert rows[0][2] == pytest.approx(rows[1][2], abs=1e-12)


def test_frame_scan_electron_line():
    kin = sc.cm_annihilation_kinematics(2.0, 1.0, M)
    rows = sc.frame_scan(kin, 0.5, [sc.Boost([0, 0, 0])], sc.ELECTRON_LINE)
    assert rows[0][1] == pytest.approx(0.25, abs=1e-12)
