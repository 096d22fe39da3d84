"""Exception family shared across normlab modules.

Every error raised on purpose by the library derives from NormlabError,
so callers can catch one type at a campaign boundary.  CLI-facing errors
(usage, config, io) are separate leaves because they map to exit codes.
"""


class NormlabError(Exception):
    """Base class for all errors raised deliberately by normlab."""


class DimensionMismatch(NormlabError):
    """Operands have incompatible shapes."""


class NotHermitian(NormlabError):
    """A Hermitian input was required but the matrix is not self-adjoint."""


class NotPositiveDefinite(NormlabError):
    """A positive definite input was required."""


class NotPSD(NormlabError):
    """A positive semidefinite input was required."""


class Singular(NormlabError):
    """Matrix is numerically singular where an inverse is required."""


class NoConvergence(NormlabError):
    """An iterative kernel failed to converge; input is pathological."""


class ZeroEigenvalue(NormlabError):
    """A spectral criterion received an eigenvalue equal to zero."""


class ZeroLambda(NormlabError):
    """The conjecture machinery received a zero lambda entry."""


class InvalidK(NormlabError):
    """Shift parameter k outside the admissible range."""


class InvalidParams(NormlabError):
    """Chain parameters (t, r) outside their admissible box."""


class DegenerateDenominator(NormlabError):
    """An entry denominator vanished; the matrix entry is undefined."""


class SamplerExhausted(NormlabError):
    """Rejection sampling hit its draw budget without an accepted point."""


class UsageError(NormlabError):
    """Command line could not be parsed."""


class ConfigInvalid(NormlabError):
    """Parsed configuration violates a documented constraint."""


class IoFailure(NormlabError):
    """Report files could not be written or read."""
