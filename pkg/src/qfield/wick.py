"""q-deformed Wick machinery: normal ordering, pairing expansion, oracle.

Normal ordering is done by exhaustive rewriting of the defining relation

    a adag -> q adag a + 1        (same label)
    a adag -> adag a              (distinct labels, factor 1)

which terminates because each step strictly reduces either the number of
annihilator-before-creator inversions or the string length.  Coefficients
are kept as exact integer-coefficient polynomials in q, so the q = +-1
statistics reductions are exact integer checks, not float comparisons.

The pairing expansion enumerates every diagram; a diagram's coefficient
is q^(crossings) times the product of its pair values, where a pair
<a adag> on one label is worth 1 and the reversed <adag a> pairing is
worth 0.  Summing full-contraction diagrams reproduces the brute-force
Fock vacuum expectation value; ``verify_wick`` is the harness that checks
exactly that.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from . import fock
from .errors import EqualTimeError
from .fock import LadderOp

OperatorString = Tuple[LadderOp, ...]

MAX_STRING_LEN = 12


class QPoly:
    """Polynomial in q with numeric coefficients, keyed by exponent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[int, complex] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def one(cls) -> "QPoly":
        return cls({0: 1.0})

    @classmethod
    def q_power(cls, p: int, scale: complex = 1.0) -> "QPoly":
        return cls({p: scale})

    def __add__(self, other: "QPoly") -> "QPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    def shift(self, p: int = 1) -> "QPoly":
        """Multiply by q^p."""
        return QPoly({e + p: c for e, c in self.coeffs.items()})

    def __call__(self, q: float) -> complex:
        return sum(c * q ** e for e, c in self.coeffs.items())

    def pure_power(self) -> int | None:
        """The exponent if this is a single power of q with unit weight."""
        if len(self.coeffs) == 1:
            (e, c), = self.coeffs.items()
            if c == 1:
                return e
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*q^{e}" for e, c in sorted(self.coeffs.items()))


@dataclass
class NormalForm:
    """Sum of normal-ordered strings with polynomial-in-q coefficients.

    ``terms`` maps each normal-ordered string (creators all left of
    annihilators) to its coefficient; ``q`` is the working value the
    evaluated ``coefficient`` numbers refer to.
    """

    terms: Dict[OperatorString, QPoly]
    q: float

    def coefficient(self, ops: OperatorString) -> complex:
        poly = self.terms.get(tuple(ops))
        return poly(self.q) if poly is not None else 0.0

    def vacuum_projection(self) -> complex:
        """Amplitude of the identity term: the string's VEV."""
        return self.coefficient(())

    def apply(self, v: fock.StateVector,
              n_max: int = fock.DEFAULT_N_MAX) -> fock.StateVector:
        """Evaluate the normal form on a state (consistency checks)."""
        out: dict = {}
        overflow = v.overflowed
        for ops, poly in self.terms.items():
            c = poly(self.q)
            w = fock.apply_string(ops, v, self.q, n_max)
            overflow = overflow or w.overflowed
            for state, amp in w.terms.items():
                out[state] = out.get(state, 0.0 + 0.0j) + c * amp
        return fock.StateVector(out, overflow).prune()


def is_normal_ordered(ops: Sequence[LadderOp]) -> bool:
    seen_annihilator = False
    for op in ops:
        if op.is_creator and seen_annihilator:
            return False
        if not op.is_creator:
            seen_annihilator = True
    return True


def normal_order(ops: Sequence[LadderOp], q: float) -> NormalForm:
    """Rewrite an operator product into normal-ordered form."""
    ops = tuple(ops)
    if len(ops) > MAX_STRING_LEN:
        raise ValueError(f"string length {len(ops)} exceeds {MAX_STRING_LEN}")
    pending: List[Tuple[OperatorString, QPoly]] = [(ops, QPoly.one())]
    done: Dict[OperatorString, QPoly] = {}
    while pending:
        string, poly = pending.pop()
        idx = _first_inversion(string)
        if idx is None:
            done[string] = done.get(string, QPoly()) + poly
            continue
        left, right = string[idx], string[idx + 1]
        swapped = string[:idx] + (right, left) + string[idx + 2:]
        if left.label == right.label:
            pending.append((swapped, poly.shift(1)))
            contracted = string[:idx] + string[idx + 2:]
            pending.append((contracted, poly))
        else:
            pending.append((swapped, poly))
    done = {s: p for s, p in done.items() if p.coeffs}
    return NormalForm(done, q)


def _first_inversion(ops: OperatorString) -> int | None:
    for i in range(len(ops) - 1):
        if not ops[i].is_creator and ops[i + 1].is_creator:
            return i
    return None


@dataclass
class PairingDiagram:
    """One term of the pairing expansion.

    ``pairs`` holds (i, j) index pairs with i < j joining two operators
    of the same label and opposite kinds; ``crossings`` counts the
    interleaved pair pairs i < k < j < l on a shared label (the only
    transpositions that cost a q); ``pair_value`` is the product
    of the individual pairings (1 for annihilator-before-creator, 0 for
    the reversed order); ``coefficient`` = q^crossings * pair_value.
    """

    pairs: Tuple[Tuple[int, int], ...]
    unpaired: Tuple[int, ...]
    crossings: int
    pair_value: float
    coefficient: complex

    @property
    def is_full(self) -> bool:
        return not self.unpaired


def wick_expand(ops: Sequence[LadderOp], q: float) -> List[PairingDiagram]:
    """Enumerate all pairing diagrams (including no pairings).

    Deterministic lexicographic diagram order.
    """
    ops = tuple(ops)
    if len(ops) > MAX_STRING_LEN:
        raise ValueError(f"string length {len(ops)} exceeds {MAX_STRING_LEN}")
    n = len(ops)
    diagrams: List[PairingDiagram] = []

    def recurse(avail: tuple, pairs: tuple):
        # Each index is either left unpaired or paired while it is the
        # head of ``avail``, so every diagram is generated exactly once.
        if not avail:
            paired = {k for p in pairs for k in p}
            free = tuple(i for i in range(n) if i not in paired)
            diagrams.append(_make_diagram(ops, pairs, free, q))
            return
        i, rest = avail[0], avail[1:]
        recurse(rest, pairs)
        for j in rest:
            if ops[i].label != ops[j].label:
                continue
            if ops[i].is_creator == ops[j].is_creator:
                continue
            recurse(tuple(k for k in rest if k != j), pairs + ((i, j),))

    recurse(tuple(range(n)), ())
    diagrams.sort(key=lambda d: d.pairs)
    return diagrams


def _make_diagram(ops: OperatorString, pairs: tuple, free: tuple,
                  q: float) -> PairingDiagram:
    # Only same-label interleavings carry a factor q: operators on
    # distinct labels commute exactly, so untangling them is free.
    crossings = 0
    for (i, j), (k, l) in combinations(sorted(pairs), 2):
        if i < k < j < l and ops[i].label == ops[k].label:
            crossings += 1
    value = 1.0
    for i, j in pairs:
        if ops[i].is_creator:  # <adag a> pairing: worth 0
            value = 0.0
            break
    return PairingDiagram(tuple(sorted(pairs)), free, crossings, value,
                          (q ** crossings) * value)


def wick_vev(ops: Sequence[LadderOp], q: float) -> complex:
    """VEV via the pairing expansion: sum of full-contraction diagrams."""
    return sum(d.coefficient for d in wick_expand(ops, q) if d.is_full)


@dataclass
class WickReport:
    ops: OperatorString
    q: float
    wick_vev: complex
    fock_vev: complex

    @property
    def abs_diff(self) -> float:
        return abs(self.wick_vev - self.fock_vev)

    @property
    def passed(self) -> bool:
        return self.abs_diff <= 1e-9 * max(1.0, abs(self.fock_vev))


def verify_wick(ops: Sequence[LadderOp], q: float,
                n_max: int = fock.DEFAULT_N_MAX) -> WickReport:
    """Compare the pairing-expansion VEV against the Fock-space oracle."""
    ops = tuple(ops)
    return WickReport(ops, q, wick_vev(ops, q), fock.vev(ops, q, n_max))


def q_time_order(f1: Sequence[LadderOp], f2: Sequence[LadderOp],
                 t1: float, t2: float, q: float):
    """Order two field factors by time with factor q on the swapped branch.

    Returns (factor, ordered string).  q = -1 recovers the usual
    fermionic T-product; equal times are undefined.
    """
    if t1 == t2:
        raise EqualTimeError(f"t1 == t2 == {t1}")
    f1, f2 = tuple(f1), tuple(f2)
    if t1 > t2:
        return 1.0, f1 + f2
    return q, f2 + f1
