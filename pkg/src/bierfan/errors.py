"""Exception types shared across the package."""


class BierfanError(Exception):
    """Base class for all errors raised by bierfan."""


class ValidationError(BierfanError, ValueError):
    """Malformed input: labels out of range, non-closed face families, bad JSON."""


class DomainError(BierfanError, ValueError):
    """Input is well formed but outside the domain of a construction."""


class PreconditionError(BierfanError, ValueError):
    """An operation's documented precondition does not hold."""


class EnumerationBoundError(BierfanError, ValueError):
    """A factorial or exponential search was requested beyond its configured bound."""


class VerificationError(BierfanError, RuntimeError):
    """An internal invariant of a constructed object failed (carries a witness)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class OverflowGuardError(BierfanError, OverflowError):
    """Fixed-width integer fast path would exceed its safe range."""
