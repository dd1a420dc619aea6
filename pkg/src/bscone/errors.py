"""Exception hierarchy.

Every error raised for bad mathematical input derives from :class:`DomainError`;
the CLI maps those to exit code 2.
"""


class DomainError(Exception):
    """Input is well-formed but mathematically unacceptable."""


class NegativeEntry(DomainError):
    pass


class TooLong(DomainError):
    """Degree sequence has more than ``vars + 1`` entries."""


class ColumnGap(DomainError):
    pass


class NotIncreasing(DomainError):
    pass


class NotInCone(DomainError):
    """Greedy decomposition stalled; ``partial`` holds the parts found so far."""

    def __init__(self, message, partial=(), remainder=None):
        super().__init__(message)
        self.partial = list(partial)
        self.remainder = remainder


class BadChain(DomainError):
    pass


class NotDegreeZero(DomainError):
    pass


class TooLarge(DomainError):
    pass
