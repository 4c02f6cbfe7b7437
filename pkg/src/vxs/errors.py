"""Exception types shared across the package."""


class VxsError(Exception):
    """Base class for all package errors."""


class DomainError(VxsError):
    """A parameter is outside the operation's domain (bad exponent range, alpha <= -1, ...)."""


class EvaluationError(VxsError):
    """A function or exponent produced non-finite values where finite ones are required."""


class BracketError(VxsError):
    """Root bracketing failed: target not enclosed by h(lo), h(hi)."""


class NotHarmonicError(VxsError):
    """Conjugation requested for an exponent that is not harmonic on the disc."""


class BranchError(VxsError):
    """Argument continuation could not be tracked (step increment too close to pi)."""


class SingularityError(VxsError):
    """A zero or pole was hit where the operation requires a zero-free function."""


class AccuracyError(VxsError):
    """A reconstruction residual exceeded tolerance; carries the residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SubordinationError(VxsError):
    """omega is not a subordinator: omega(0) != 0 or |omega(z)| > |z| somewhere."""


class NotInSpaceError(VxsError):
    """The modular diverges at every scale: f is not in the space."""


class SchemaError(VxsError):
    """A JSON/CSV input does not match the documented schema."""
