"""
Shared Utilities Library

Configuration, logging and the error hierarchy used across components.
"""

from .config import config, get, PROJECT_ROOT
from .errors import (
    EngineError, InputError, IdealError, GraphError, MatchingError,
    CapacityError, BudgetExceeded,
)

__all__ = [
    'config',
    'get',
    'PROJECT_ROOT',
    'EngineError',
    'InputError',
    'IdealError',
    'GraphError',
    'MatchingError',
    'CapacityError',
    'BudgetExceeded',
]
