"""
Bridge Theory Component

Bridges, gaps, true gaps, the smallest-bridge function and the structural
classification of symbols.
"""

from .bridges import (
    SymbolClass,
    FriendlinessCertificate,
    is_bridge,
    is_gap,
    sbridge,
    is_true_gap,
    true_gaps,
    is_type1,
    is_potentially_type2,
    classify_structural,
    check_friendliness_criterion,
)

__all__ = [
    'SymbolClass',
    'FriendlinessCertificate',
    'is_bridge',
    'is_gap',
    'sbridge',
    'is_true_gap',
    'true_gaps',
    'is_type1',
    'is_potentially_type2',
    'classify_structural',
    'check_friendliness_criterion',
]
