"""Shared exception types."""


class ModhypError(Exception):
    pass


class InsufficientPrecision(ModhypError):
    """Raised when a computation needs more known q-series coefficients.

    `needed` carries the first missing absolute exponent when known.
    """

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed


class NotABasis(ModhypError):
    pass


class EulerInconsistency(ModhypError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ConstraintViolation(ModhypError):
    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = violations or []


class FixtureParseError(ModhypError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class RecoveryError(ModhypError):
    pass


class CriterionFailure(ModhypError):
    """The candidate space is not the jacobian of a hyperelliptic curve."""
