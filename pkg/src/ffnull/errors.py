"""Exception hierarchy shared by every module of the package."""


class FFNullError(Exception):
    """Base class for all errors raised by ffnull."""


class InputError(FFNullError, ValueError):
    """Invalid user input: bad field parameters, bad polynomial text, etc."""


class NonPrimeError(InputError):
    def __init__(self, p):
        super().__init__(f"characteristic {p} is not prime")
        self.p = p


class ReducibleModulusError(InputError):
    pass


class DegreeMismatchError(InputError):
    pass


class FieldMismatchError(FFNullError, TypeError):
    pass


class RingMismatchError(FFNullError, TypeError):
    pass


class DimensionMismatchError(InputError):
    pass


class ZeroPolynomialError(InputError):
    pass


class ZeroDivisorError(InputError):
    """A divisor handed to the division algorithm is the zero polynomial."""


class ZeroGeneratorError(InputError):
    pass


class NotHomogeneousError(InputError):
    pass


class PolySyntaxError(InputError):
    """Malformed polynomial or field-element text.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, position, text=""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownVariableError(PolySyntaxError):
    pass


class CoefficientNotInFieldError(PolySyntaxError):
    pass


class EmptyPointSetError(InputError):
    pass


class DuplicatePointsError(InputError):
    pass


class ResourceLimitError(FFNullError, RuntimeError):
    """A configured cap (pairs, S-pair degree) was exceeded."""


class TooLargeError(ResourceLimitError):
    """Exhaustive enumeration would exceed the candidate-point cap."""

    def __init__(self, size, cap):
        super().__init__(f"{size} candidate points exceeds the enumeration cap {cap}")
        self.size = size
        self.cap = cap
