"""Exception types raised across the toolkit."""


class KodairaKitError(Exception):
    pass


class ZeroDenominator(KodairaKitError, ZeroDivisionError):
    pass


class UnknownVariable(KodairaKitError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class IndexOutOfRange(KodairaKitError, IndexError):
    pass


class DegreeMismatch(KodairaKitError, ValueError):
    pass


class DimensionMismatch(KodairaKitError, ValueError):
    pass


class NotEquivalent(KodairaKitError, ValueError):
    pass


class ZeroFunction(KodairaKitError, ValueError):
    pass


class NonSplitPolynomial(KodairaKitError, ValueError):
    pass


class InvalidChart(KodairaKitError, ValueError):
    pass


class ZeroMetric(KodairaKitError, ValueError):
    pass


class PoleAtSample(KodairaKitError, ZeroDivisionError):
    pass


class EmptyBasis(KodairaKitError, ValueError):
    pass


class BasePointEvaluation(KodairaKitError, ValueError):
    pass


class EqualPoints(KodairaKitError, ValueError):
    pass
