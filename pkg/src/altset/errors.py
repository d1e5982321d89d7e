"""Exception types raised by the kernel."""


class AltSetError(Exception):
    """Base class for domain errors."""


class EmptyInput(AltSetError, ValueError):
    pass


class CapExceeded(AltSetError, ValueError):
    pass


class DivisionByZero(AltSetError, ZeroDivisionError):
    pass


class InfiniteArgument(AltSetError, ValueError):
    """A bounded argument was required but the value is infinite."""


class DimensionMismatch(AltSetError, ValueError):
    pass


class TooFewSamples(AltSetError, ValueError):
    pass


class IllFormedSequence(AltSetError, ValueError):
    """The rule of a sequence is undefined at some non-negative integer index."""


class ParseError(AltSetError, ValueError):
    pass
