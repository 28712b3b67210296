"""Exception hierarchy shared by all modules."""


class MatDiophError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(MatDiophError, ValueError):
    pass


class DegreeError(MatDiophError, ValueError):
    pass


class NotMonic(MatDiophError, ValueError):
    pass


class ZeroDegree(MatDiophError, ValueError):
    pass


class TrivialParameters(MatDiophError, ValueError):
    pass


class InadmissibleExponent(MatDiophError, ValueError):
    pass


class DegenerateBase(MatDiophError, ValueError):
    pass


class IndivisibleL(MatDiophError, ValueError):
    pass


class SelectorOutOfRange(MatDiophError, ValueError):
    pass


class Unsolvable(MatDiophError):
    """No unit pattern makes the exponent triple reachable.

    ``evidence`` holds the exhaustive-search record: the exponents, the number
    of candidate triples examined and the unit exponents reachable by each of
    ``n``, ``p`` and ``q``.
    """

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence or {}


class VerificationError(MatDiophError):
    """A constructed triple failed the independent check."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
