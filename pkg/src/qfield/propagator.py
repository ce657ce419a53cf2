"""q-deformed propagators: momentum-space forms, pole residues, and
position-space evaluation by oscillatory quadrature.

Momentum space, scalar:

    D(k) = (1/2) [ (1+q)/(k^2-m^2) + (1-q)(k0/w)/(k^2-m^2) ],
    w = sqrt(|kvec|^2 + m^2)

equivalently (1/2w)[1/(k0-w) - q/(k0+w)]: two poles of unequal strength
1 and q.  The spinor form carries (m + pslash)/2m and swaps q -> -q in
the scalar factor; the photon/vector form is the metric (or the massive
projector) times the scalar factor.

Position space reduces to 1-D radial integrals with a slowly decaying
oscillatory tail (integrand ~ sin(pr) at large p).  These are evaluated
by integrating panel-by-panel between consecutive zeros of the
oscillation and accelerating the alternating partial sums with Wynn's
epsilon algorithm, which Abel-sums the non-decaying tail.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import METRIC, slash
from .errors import ConvergenceError, PoleError, ZeroMassError

POLE_GUARD = 1e-10

_GAUSS_N = 24
_GAUSS_X, _GAUSS_W = np.polynomial.legendre.leggauss(_GAUSS_N)


@dataclass
class PropagatorValue:
    """Propagator evaluation plus diagnostics.

    ``value`` is a complex scalar or a 4x4 complex matrix;
    ``onshell_distance`` is |k^2 - m^2|; ``quad_error`` is present only
    for quadrature-based position-space evaluations.
    """

    value: object
    onshell_distance: float
    quad_error: float | None = None


def omega(kvec, m: float) -> float:
    kvec = np.asarray(kvec, dtype=float)
    return float(np.sqrt(kvec @ kvec + m * m))


def _scalar_factor(k0: float, kvec, m: float, q: float) -> tuple:
    w = omega(kvec, m)
    k2_m2 = k0 * k0 - w * w
    if abs(k2_m2) <= POLE_GUARD:
        raise PoleError(f"|k^2 - m^2| = {abs(k2_m2)} inside guard band")
    val = 0.5 * ((1.0 + q) + (1.0 - q) * (k0 / w)) / k2_m2
    return val, abs(k2_m2)


def scalar_propagator_momentum(k, m: float, q: float) -> PropagatorValue:
    """Momentum-space q-causal scalar propagator; 1/(k^2-m^2) at q=1."""
    k = np.asarray(k, dtype=float)
    val, dist = _scalar_factor(k[0], k[1:], m, q)
    return PropagatorValue(complex(val), dist)


def scalar_propagator_partial_fractions(k, m: float, q: float) -> PropagatorValue:
    """Same propagator via (1/2w)[1/(k0-w) - q/(k0+w)] (consistency form)."""
    k = np.asarray(k, dtype=float)
    w = omega(k[1:], m)
    dist = abs(k[0] ** 2 - w * w)
    if abs(k[0] - w) * 2 * w <= POLE_GUARD or abs(k[0] + w) * 2 * w <= POLE_GUARD:
        raise PoleError("evaluation inside guard band")
    val = (1.0 / (k[0] - w) - q / (k[0] + w)) / (2.0 * w)
    return PropagatorValue(complex(val), dist)


def pole_residues(kvec, m: float, q: float, h0: float | None = None) -> tuple:
    """Numerically extracted residues at k0 = +-w: (1/2w, -q/2w).

    Evaluates (k0 -+ w) * D near each pole and Richardson-extrapolates
    h -> 0.  The physical (+w) residue is q-independent.
    """
    kvec = np.asarray(kvec, dtype=float)
    w = omega(kvec, m)
    if w <= 0.0:
        raise ZeroMassError("need omega > 0")
    if h0 is None:
        h0 = 1e-3 * max(w, 1.0)

    def near_plus(h):
        val, _ = _scalar_factor(w + h, kvec, m, q)
        return h * val

    def near_minus(h):
        val, _ = _scalar_factor(-w + h, kvec, m, q)
        return h * val

    return (_richardson(near_plus, h0), _richardson(near_minus, h0))


def _richardson(f, h0: float, levels: int = 5) -> float:
    table = [f(h0 / 2 ** i) for i in range(levels)]
    for j in range(1, levels):
        for i in range(levels - j):
            table[i] = (2 ** j * table[i + 1] - table[i]) / (2 ** j - 1)
    return table[0]


def spinor_propagator_momentum(p, m: float, q: float) -> PropagatorValue:
    """Spinor propagator: (m+pslash)/2m times the scalar factor with q -> -q.

    Reduces to (m+pslash)/(2m (p^2-m^2)) at q = -1.
    """
    if m <= 0.0:
        raise ZeroMassError("spinor propagator needs m > 0")
    p = np.asarray(p, dtype=float)
    val, dist = _scalar_factor(p[0], p[1:], m, -q)
    matrix = (m * np.eye(4) + slash(p)) / (2.0 * m) * val
    return PropagatorValue(matrix, dist)


def photon_propagator_momentum(k, m: float, q: float) -> PropagatorValue:
    """Vector propagator: g (massless) or g - k k / m^2 (massive) times scalar.

    The half-sum scalar form is used internally, so q = -1 is evaluable.
    """
    k = np.asarray(k, dtype=float)
    val, dist = _scalar_factor(k[0], k[1:], m, q)
    if m > 0.0:
        tensor = METRIC - np.outer(k, k) / (m * m)
    else:
        tensor = METRIC
    return PropagatorValue(tensor.astype(complex) * val, dist)


def _wynn_epsilon(partial_sums) -> tuple:
    """Accelerate a sequence of partial sums; returns (limit, error_estimate)."""
    s = list(partial_sums)
    n = len(s)
    if n < 3:
        return s[-1], float("inf")
    eps_prev = [0.0] * (n + 1)          # epsilon_{-1}
    eps_curr = list(s)                  # epsilon_0
    best = s[-1]
    err = abs(s[-1] - s[-2])
    col = 0
    while len(eps_curr) >= 2:
        nxt = []
        for i in range(len(eps_curr) - 1):
            diff = eps_curr[i + 1] - eps_curr[i]
            if abs(diff) < 1e-300:
                # a (near-)constant even column is (numerically) exact
                if col % 2 == 0:
                    return eps_curr[i], 0.0
                nxt = []
                break
            nxt.append(eps_prev[i + 1] + 1.0 / diff)
        if not nxt:
            break
        eps_prev, eps_curr = eps_curr, nxt
        col += 1
        # even columns are the accelerated approximants; estimate the
        # error from agreement along the column
        if col % 2 == 0 and len(eps_curr) >= 2:
            cand_err = abs(eps_curr[-1] - eps_curr[-2])
            if cand_err < err:
                best, err = eps_curr[-1], cand_err
    return best, err


def _panel_integrate(f, lo: float, hi: float) -> complex:
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = mid + half * _GAUSS_X
    return half * np.sum(_GAUSS_W * f(x))


def oscillatory_integral(f, period: float, rel_tol: float = 1e-8,
                         max_panels: int = 500, min_panels: int = 12) -> tuple:
    """Integrate f over [0, inf) by half-period panels + epsilon acceleration.

    ``period`` is the half-period of the dominant oscillation (panel
    width).  Returns (value, error_estimate); raises ConvergenceError if
    the accelerated tail never stabilizes.
    """
    sums = []
    total = 0.0
    best, err = None, float("inf")
    for n in range(max_panels):
        total = total + _panel_integrate(f, n * period, (n + 1) * period)
        sums.append(total)
        if n + 1 >= min_panels and (n % 4 == 0):
            best, err = _wynn_epsilon(sums)
            scale = max(1.0, abs(best))
            if err <= rel_tol * scale:
                return best, err
    raise ConvergenceError(
        f"tail not stabilized after {max_panels} panels (err ~ {err})")


def delta_plus_equal_time(r: float, m: float,
                          rel_tol: float = 1e-8) -> PropagatorValue:
    """Equal-time Wightman function as the radial oscillatory integral

        (1/(4 pi^2 r)) Int_0^inf dp p sin(p r) / omega(p)

    Closed form m K1(m r)/(4 pi^2 r); the massless limit is 1/(4 pi^2 r^2).
    """
    if r <= 0.0:
        raise ValueError("need r > 0")
    if m < 0.0:
        raise ValueError("need m >= 0")

    def integrand(p):
        return p * np.sin(p * r) / np.sqrt(p * p + m * m)

    val, err = oscillatory_integral(integrand, np.pi / r, rel_tol)
    pref = 1.0 / (4.0 * np.pi ** 2 * r)
    return PropagatorValue(pref * val, float("nan"), pref * err)


def spacelike_q_commutator(r: float, m: float, q: float,
                           rel_tol: float = 1e-8) -> PropagatorValue:
    """Equal-time spacelike q-commutator (1-q) * Delta_plus(r).

    Zero at q = 1 (causal limit); nonzero otherwise.  The quantitative
    causality-violation probe.
    """
    base = delta_plus_equal_time(r, m, rel_tol)
    return PropagatorValue((1.0 - q) * base.value, float("nan"),
                           abs(1.0 - q) * base.quad_error)


def causal_position(t: float, r: float, m: float, q: float,
                    rel_tol: float = 1e-8) -> PropagatorValue:
    """q-causal propagator in position space (off the light cone).

    For t > 0 this is the positive-frequency hyperboloid integral

        I(t, r) = (1/(4 pi^2 r)) Int_0^inf dk k sin(k r) e^{-i w t} / w,

    for t < 0 it is q * conj(I(|t|, r)).  Requires r > 0 and r != |t|.
    """
    if t == 0.0:
        raise ValueError("need t != 0 (use delta_plus_equal_time)")
    if r <= 0.0:
        raise ValueError("light-cone/axis evaluation unsupported (need r > 0)")
    ta = abs(t)
    if abs(r - ta) < 1e-12:
        raise ConvergenceError("evaluation on the light cone r = |t|")

    # Split sin(kr) e^{-i w t} into e^{ik(r-t)} and e^{-ik(r+t)} pieces
    # modulated by the decaying phase e^{-i(w-k)t}; each piece gets
    # panels matched to its own oscillation frequency.
    def make_piece(s, sign):
        def f(k):
            w = np.sqrt(k * k + m * m)
            g = (k / w) * np.exp(-1j * (w - k) * ta)
            return sign * g * np.exp(1j * k * s) / 2j
        return f

    val1, err1 = oscillatory_integral(make_piece(r - ta, +1.0),
                                      np.pi / abs(r - ta), rel_tol)
    val2, err2 = oscillatory_integral(make_piece(-(r + ta), -1.0),
                                      np.pi / (r + ta), rel_tol)
    pref = 1.0 / (4.0 * np.pi ** 2 * r)
    value = pref * (val1 + val2)
    err = pref * (err1 + err2)
    if t < 0:
        value = q * np.conj(value)
        err = abs(q) * err
    return PropagatorValue(complex(value), float("nan"), err)
