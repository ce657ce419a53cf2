"""q-deformed field quantization toolkit.

Modules:
    qcore       basic q-numbers and deformed occupancy statistics
    fock        truncated q-Fock space, ladder operators, brute-force VEVs
    wick        q-Wick normal ordering and pairing expansion + oracle harness
    dirac       Minkowski kinematics, gamma matrices, spinors, projectors
    propagator  q-causal propagators in momentum and position space
    scattering  Moller / annihilation correction factors and frame scans
    cli         command-line front end (CSV output, golden files)
"""
from . import qcore, fock, wick, dirac, propagator, scattering, errors
from .qcore import basic_number, q_occupancy
from .fock import a, a_dag, b, b_dag, vev, StateVector
from .wick import normal_order, wick_expand, wick_vev, verify_wick, q_time_order
from .propagator import (scalar_propagator_momentum, spinor_propagator_momentum,
                         photon_propagator_momentum, pole_residues,
                         delta_plus_equal_time, spacelike_q_commutator,
                         causal_position)
from .scattering import (Boost, ProcessKinematics, boost, correction_factor,
                         moller_amplitude, annihilation_correction_pair,
                         frame_scan)

__version__ = "0.1.0"
