"""Exception hierarchy shared by all modules."""


class LorentzInvariantsError(Exception):
    """Base class for library errors."""


class ParseError(LorentzInvariantsError, ValueError):
    """Raised when a scalar or polynomial expression cannot be parsed."""

    def __init__(self, message, text="", position=0, expected=None):
        self.text = text
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class DimensionError(LorentzInvariantsError, ValueError):
    """Operand shapes do not agree."""


class NotLorentzError(LorentzInvariantsError, ValueError):
    """A matrix required to satisfy A^t J A = J does not."""


class NotInvolutionError(LorentzInvariantsError, ValueError):
    """A matrix required to square to the identity does not."""


class UndecidedError(LorentzInvariantsError, ArithmeticError):
    """A sign or factorization cannot be decided from the available data."""


class UnverifiableError(LorentzInvariantsError):
    """A hypothesis could not be certified by the bounded check."""


class NotInvariantError(LorentzInvariantsError, ValueError):
    """A subspace or function was expected to be invariant and is not."""
