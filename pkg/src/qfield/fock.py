"""Truncated q-deformed Fock space with exact ladder-operator action.

Two species (particle ``a``, antiparticle ``b``), a small set of discrete
modes standing in for the continuum (momentum, spin) label, and the
q-oscillator representation

    a|n> = sqrt(<n>_q) |n-1>,    adag|n> = sqrt(<n+1>_q) |n+1>

so that  a adag - q adag a = 1  holds on every basis state.  Operators
carrying distinct (species, mode) labels commute exactly; this is the
minimal consistent multimode convention and is what makes the brute-force
vacuum expectation values here a well-defined oracle for the Wick engine.

Charge conjugation swaps the two species with a unit phase epsilon.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NegativeNormError
from .qcore import basic_number

PARTICLE = "particle"
ANTIPARTICLE = "antiparticle"

ANNIHILATE = "annihilate"
CREATE = "create"

DEFAULT_N_MAX = 16
DEFAULT_N_MODES = 4
MAX_STRING_LEN = 12

PRUNE_TOL = 1e-15

# <n>_q may come out at tiny negative values through rounding; anything
# below this is a genuinely imaginary ladder coefficient.
NEGATIVE_NORM_TOL = 1e-12


@dataclass(frozen=True, order=True)
class ModeLabel:
    """Discrete stand-in for the continuum (momentum, spin) label."""

    species: str
    mode: int = 0

    def __post_init__(self):
        if self.species not in (PARTICLE, ANTIPARTICLE):
            raise ValueError(f"unknown species {self.species!r}")
        if self.mode < 0:
            raise ValueError("mode index must be nonnegative")


@dataclass(frozen=True)
class LadderOp:
    kind: str
    label: ModeLabel

    def __post_init__(self):
        if self.kind not in (ANNIHILATE, CREATE):
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def is_creator(self) -> bool:
        return self.kind == CREATE

    def __repr__(self):
        sym = "a" if self.label.species == PARTICLE else "b"
        dag = "+" if self.is_creator else ""
        return f"{sym}{self.label.mode}{dag}"


def a(mode: int = 0) -> LadderOp:
    return LadderOp(ANNIHILATE, ModeLabel(PARTICLE, mode))


def a_dag(mode: int = 0) -> LadderOp:
    return LadderOp(CREATE, ModeLabel(PARTICLE, mode))


def b(mode: int = 0) -> LadderOp:
    return LadderOp(ANNIHILATE, ModeLabel(ANTIPARTICLE, mode))


def b_dag(mode: int = 0) -> LadderOp:
    return LadderOp(CREATE, ModeLabel(ANTIPARTICLE, mode))


# A basis state is a sorted tuple of ((species, mode) label, occupation>0).
FockState = tuple


def _state_get(state: FockState, label: ModeLabel) -> int:
    for lab, n in state:
        if lab == label:
            return n
    return 0


def _state_set(state: FockState, label: ModeLabel, n: int) -> FockState:
    items = [(lab, occ) for lab, occ in state if lab != label]
    if n > 0:
        items.append((label, n))
    items.sort()
    return tuple(items)


VACUUM: FockState = ()


@dataclass
class StateVector:
    """Complex linear combination of Fock basis states.

    ``overflowed`` flags that some creation chain hit the truncation and
    the affected component was dropped (mapped to the zero vector).
    """

    terms: dict = field(default_factory=dict)
    overflowed: bool = False

    @classmethod
    def vacuum(cls) -> "StateVector":
        return cls({VACUUM: 1.0 + 0.0j})

    def prune(self) -> "StateVector":
        self.terms = {s: c for s, c in self.terms.items() if abs(c) >= PRUNE_TOL}
        return self

    def amplitude(self, state: FockState) -> complex:
        return self.terms.get(state, 0.0 + 0.0j)

    def norm2(self) -> float:
        return sum(abs(c) ** 2 for c in self.terms.values())


def apply_ladder(op: LadderOp, v: StateVector, q: float,
                 n_max: int = DEFAULT_N_MAX) -> StateVector:
    """Apply one ladder operator to a state vector (linear, exact)."""
    out: dict = {}
    overflowed = v.overflowed
    for state, amp in v.terms.items():
        n = _state_get(state, op.label)
        if op.is_creator:
            if n + 1 > n_max:
                overflowed = True
                continue
            coeff2 = basic_number(q, n + 1)
            if coeff2 < -NEGATIVE_NORM_TOL:
                raise NegativeNormError(
                    f"<{n + 1}>_q = {coeff2} < 0 at q={q}")
            coeff = max(coeff2, 0.0) ** 0.5
            new = _state_set(state, op.label, n + 1)
        else:
            if n == 0:
                continue
            coeff2 = basic_number(q, n)
            if coeff2 < -NEGATIVE_NORM_TOL:
                raise NegativeNormError(
                    f"<{n}>_q = {coeff2} < 0 at q={q}")
            coeff = max(coeff2, 0.0) ** 0.5
            new = _state_set(state, op.label, n - 1)
        out[new] = out.get(new, 0.0 + 0.0j) + coeff * amp
    return StateVector(out, overflowed).prune()


def apply_string(ops: Sequence[LadderOp], v: StateVector, q: float,
                 n_max: int = DEFAULT_N_MAX) -> StateVector:
    """Apply a product of ladder operators, rightmost factor first."""
    for op in reversed(list(ops)):
        v = apply_ladder(op, v, q, n_max)
    return v


def vev(ops: Sequence[LadderOp], q: float,
        n_max: int = DEFAULT_N_MAX) -> complex:
    """Brute-force vacuum expectation value of an operator product.

    The oracle for the Wick engine: exact up to floating point once
    n_max exceeds half the string length.
    """
    ops = list(ops)
    if len(ops) > MAX_STRING_LEN:
        raise ValueError(f"string length {len(ops)} exceeds {MAX_STRING_LEN}")
    if n_max < -(-len(ops) // 2):
        raise ValueError("n_max too small for exact evaluation")
    result = apply_string(ops, StateVector.vacuum(), q, n_max)
    return result.amplitude(VACUUM)


def charge_conjugate_op(op: LadderOp, epsilon: complex = 1.0):
    """Conjugate a single ladder operator: C a C^-1 = eps b, etc.

    Returns (phase, operator) since the image carries the phase factor.
    """
    _check_phase(epsilon)
    other = ANTIPARTICLE if op.label.species == PARTICLE else PARTICLE
    new = LadderOp(op.kind, ModeLabel(other, op.label.mode))
    if op.label.species == PARTICLE:
        phase = epsilon.conjugate() if op.is_creator else epsilon
    else:
        phase = epsilon if op.is_creator else epsilon.conjugate()
    return phase, new


def charge_conjugate_state(v: StateVector, epsilon: complex = 1.0) -> StateVector:
    """Conjugate a state: swap species occupations and apply phases.

    A basis state built from n particle creators and m antiparticle
    creators picks up (eps*)^n * eps^m.  The vacuum is invariant.
    """
    _check_phase(epsilon)
    out: dict = {}
    for state, amp in v.terms.items():
        n_part = sum(occ for lab, occ in state if lab.species == PARTICLE)
        n_anti = sum(occ for lab, occ in state if lab.species == ANTIPARTICLE)
        phase = (epsilon.conjugate() ** n_part) * (epsilon ** n_anti)
        swapped = tuple(sorted(
            (ModeLabel(ANTIPARTICLE if lab.species == PARTICLE else PARTICLE,
                       lab.mode), occ)
            for lab, occ in state))
        out[swapped] = out.get(swapped, 0.0 + 0.0j) + phase * amp
    return StateVector(out, v.overflowed).prune()


def charge_conjugate_string(ops: Iterable[LadderOp], epsilon: complex = 1.0):
    """Conjugate a whole operator product termwise: returns (phase, ops)."""
    phase = 1.0 + 0.0j
    new_ops = []
    for op in ops:
        p, new = charge_conjugate_op(op, epsilon)
        phase *= p
        new_ops.append(new)
    return phase, tuple(new_ops)


def _check_phase(epsilon: complex):
    if abs(abs(complex(epsilon)) - 1.0) > 1e-12:
        raise ValueError(f"|epsilon| must be 1, got {abs(complex(epsilon))}")
