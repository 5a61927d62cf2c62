"""Exception types raised by the package."""


class JordanError(ValueError):
    """Base class for all errors raised by jordanalg."""


class ShapeError(JordanError):
    """Operands do not share the algebra shape (or have mismatched widths)."""


class UnsupportedKindError(JordanError):
    """Operation is undefined for this algebra kind (e.g. dense coercion of spin)."""


class ValidationError(JordanError):
    """Input data violates a contract (non-Hermitian matrix, non-finite value, ...)."""


class ConfigError(JordanError):
    """Generator configuration is inconsistent with the requested shape."""


class UnsupportedSuiteError(JordanError):
    """The requested (kind, identity) combination is not a runnable suite."""


class ParseError(JordanError):
    """Malformed serialized input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
