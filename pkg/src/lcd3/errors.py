"""Exception hierarchy shared across the package."""


class Lcd3Error(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(Lcd3Error, ValueError):
    """Operands have incompatible or invalid shapes."""


class NotABasisError(Lcd3Error, ValueError):
    """A generator matrix is rank-deficient."""


class BudgetExceededError(Lcd3Error, RuntimeError):
    """An enumeration or search would exceed its configured budget."""


class TransformError(Lcd3Error, ValueError):
    """A puncture/shorten/juxtapose/scale operation violates its contract."""


class VerificationError(Lcd3Error, RuntimeError):
    """A constructed code failed to reproduce its expected parameters."""


class FileFormatError(Lcd3Error, ValueError):
    """A code file or manifest is malformed.

    ``line`` carries the 1-based offending line number when known.
    """

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
