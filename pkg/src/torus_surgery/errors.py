"""Exception hierarchy shared by every module."""


class TorusSurgeryError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(TorusSurgeryError, ValueError):
    """A vector or matrix has the wrong length or column count."""


class InputInvariantError(TorusSurgeryError, ValueError):
    """An input object violates one of its structural invariants."""


class InvalidFramingError(InputInvariantError):
    """The two vectors do not complete the meridian to a basis of Z^3."""


class InvalidSurgeryError(InputInvariantError):
    """Surgery coefficients are not coprime or the curve is not primitive."""


class InconsistentComplementError(InputInvariantError):
    """Complement data contradicts a homological law (the message names it)."""


class InconsistentAmbientError(InputInvariantError):
    """Ambient Betti numbers, Euler number and signature do not fit together."""


class NotApplicableError(TorusSurgeryError):
    """The requested statement does not apply under the given hypotheses."""


class UnsupportedReversalError(TorusSurgeryError):
    """Only (1, k) surgeries have a stated inverse."""


class RequiresMinimalModelError(TorusSurgeryError):
    """Kodaira classification needs the invariants of a minimal model."""


class UnrealizableProfileError(TorusSurgeryError):
    """(K^2 > 0, K.[w] = 0) is not covered by the classification table."""


class InstanceFormatError(TorusSurgeryError, ValueError):
    """An instance document is malformed; ``path`` locates the bad field."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
