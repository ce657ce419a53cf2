"""Typed exceptions shared across the package.

Every divergence or invalid input maps to one of these; no operation
returns a silent NaN.
"""


class QFieldError(Exception):
    """Base class for all package errors."""


class OccupancyPoleError(QFieldError):
    """e^x == q in the deformed occupancy formula (unphysical parameter pair)."""


class NegativeNormError(QFieldError):
    """A ladder coefficient sqrt(<n>_q) would be imaginary (<n>_q < 0)."""


class EqualTimeError(QFieldError):
    """q-time ordering is undefined at exactly equal times."""


class OffShellError(QFieldError):
    """A four-momentum that must satisfy p^2 = m^2 does not."""


class ZeroMassError(QFieldError):
    """Operation requires m > 0."""


class ZeroVectorError(QFieldError):
    """Operation requires a nonzero spatial vector."""


class PoleError(QFieldError):
    """Momentum-space propagator evaluated inside the pole guard band."""


class ConvergenceError(QFieldError):
    """Accelerated oscillatory quadrature failed to stabilize."""


class SuperluminalError(QFieldError):
    """Boost velocity with |beta| >= 1."""


class DegenerateTransferError(QFieldError):
    """Vanishing momentum transfer in a scattering correction factor."""
