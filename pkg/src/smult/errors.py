"""Exception hierarchy shared by every smult module."""


class SmultError(Exception):
    """Base class for all errors raised by smult."""


class StructuralError(SmultError, ValueError):
    """Inputs of incompatible shape (exponent length, variable count, ...)."""


class NotArtinian(SmultError):
    """A quotient that should have finite length is infinite."""


class ModulusMismatch(SmultError):
    """Objects over different prime fields were combined."""


class CharacteristicMismatch(ModulusMismatch):
    """Factors of a fiber product live in different characteristics."""


class UnsupportedSurjection(SmultError):
    """A fiber-product surjection is not of variable-matching form."""


class UnsupportedIdeal(SmultError):
    """An ideal cannot be used by the requested construction."""


class TruncationTooSmall(SmultError):
    """A truncated algebra is too coarse to resolve the requested ideal."""


class MissingInput(SmultError):
    """A check was configured without an input its theorem requires."""


class ConfigError(SmultError):
    """Malformed configuration file or ring specification."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
