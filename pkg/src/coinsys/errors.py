"""Exception hierarchy for coin-system construction and analysis."""


class CoinSystemError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CoinSystemError, ValueError):
    """Input text is not a comma-separated list of base-10 integers."""


class EmptyInputError(CoinSystemError, ValueError):
    """A coin system needs at least one denomination."""


class NonPositiveValueError(CoinSystemError, ValueError):
    """Denominations must be positive integers."""


class NotStartingAtOneError(CoinSystemError, ValueError):
    """The smallest denomination must be 1 so every value is payable."""


class NotStrictlyIncreasingError(CoinSystemError, ValueError):
    """Denominations must be given in strictly increasing order."""


class OverflowRiskError(CoinSystemError, OverflowError):
    """Twice the largest denomination must fit in a signed 64-bit integer."""


class IndexOutOfRangeError(CoinSystemError, IndexError):
    """Coin index outside 1..n."""


class WrongSizeError(CoinSystemError, ValueError):
    """Operation requires a system with a specific number of denominations."""


class UnsupportedSizeError(CoinSystemError, ValueError):
    """No closed-form decision is available for systems this large."""


class PrerequisiteViolatedError(CoinSystemError, ValueError):
    """A precondition on a subsystem (e.g. prefix canonicity) does not hold."""


class HypothesisViolatedError(CoinSystemError, ValueError):
    """System does not satisfy the structural hypothesis of the test."""


class DomainViolationError(CoinSystemError, ValueError):
    """Closed-form parameter outside its admissible range."""


class InvalidSpecError(CoinSystemError, ValueError):
    """Enumeration spec is inconsistent (size, bound, or filter)."""


class IoFailureError(CoinSystemError, OSError):
    """Writing a report to a stream failed."""
