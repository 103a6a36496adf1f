"""
Engine error hierarchy.

Every error carries the exit code the CLI returns for it:
2 for bad input, 3 for exceeded capacity or search budget.
Negative verdicts (not friendly, not minimal) are results, not errors.
"""


class EngineError(Exception):
    """Base class for all engine errors"""

    exit_code = 2


class InputError(EngineError, ValueError):
    """Malformed input: monomial text, order strings, symbol strings, files"""


class IdealError(InputError):
    """Ring context mismatch, degenerate ideal, exponent overflow"""


class GraphError(InputError):
    """Graph is not of the required shape, or a hypothesis does not hold"""


class MatchingError(EngineError):
    """A matching fails validation where a valid one is required"""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CapacityError(EngineError):
    """A configured capacity limit was exceeded"""

    exit_code = 3

    def __init__(self, message, limit=None, actual=None):
        super().__init__(message)
        self.limit = limit
        self.actual = actual


class BudgetExceeded(CapacityError):
    """Order search ran out of budget; carries the partial report"""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def require_capacity(what, actual, limit):
    """
    Raise CapacityError when actual exceeds limit

    Examples:
        >>> require_capacity('oracle generators', 12, 16)
        >>> require_capacity('oracle generators', 20, 16)
        Traceback (most recent call last):
        ...
        lib.errors.CapacityError: oracle generators: 20 exceeds limit 16 ...
    """
    if limit is not None and actual > limit:
        raise CapacityError(
            f"{what}: {actual} exceeds limit {limit} "
            f"(raise capacity in config/config.local.yaml)",
            limit=limit, actual=actual,
        )


__all__ = [
    'EngineError', 'InputError', 'IdealError', 'GraphError', 'MatchingError',
    'CapacityError', 'BudgetExceeded', 'require_capacity',
]
