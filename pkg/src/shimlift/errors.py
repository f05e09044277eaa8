"""Exception hierarchy shared by every module of the package."""


class ShimliftError(Exception):
    """Base class for all errors raised by shimlift."""


class IncompatibleOrder(ShimliftError, ValueError):
    """Two cyclotomic values of different orders were combined."""


class PrecisionExceeded(ShimliftError, IndexError):
    """A coefficient beyond the known precision was requested."""


class InsufficientPrecision(ShimliftError, ValueError):
    """An input series is too short for the requested output precision."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class NotSquarefree(ShimliftError, ValueError):
    pass


class NotADiscriminant(ShimliftError, ValueError):
    pass


class NotFundamental(ShimliftError, ValueError):
    pass


class NotDivisible(ShimliftError, ValueError):
    pass


class BadUnitaryDivisor(ShimliftError, ValueError):
    pass


class NonIntegralEtaExponent(ShimliftError, ValueError):
    pass


class HalfIntegralWeightUnsupported(ShimliftError, ValueError):
    pass


class VanishingNormalizer(ShimliftError, ZeroDivisionError):
    pass


class HypothesisViolated(ShimliftError, ValueError):
    pass


class ParseError(ShimliftError, ValueError):
    """Malformed text input; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateIndex(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass
