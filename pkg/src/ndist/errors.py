"""Exception types shared across the package.

The CLI maps these onto exit codes: usage problems exit 2, mathematical
violations exit 1.
"""


class UsageError(ValueError):
    """Malformed input, bad flags, or a request outside an operation's domain."""


class UnsupportedScaleError(UsageError):
    """The requested instance is outside the supported (n, q) envelope."""


class SimplexViolationError(RuntimeError):
    """A simplex-inequality bookkeeping impossibility (zero denominator with a
    positive numerator).  Carries the offending configuration for reporting."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
