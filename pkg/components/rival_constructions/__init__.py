"""
Rival Constructions Component

Taylor ranks, the Lyubeznik matching, the Scarf complex and the Yuzvinsky
condition, for comparison with bridge matchings.
"""

from .rivals import (
    taylor_ranks,
    lyubeznik_vL,
    lyubeznik_mL,
    lyubeznik_matching,
    lyubeznik_ranks,
    scarf_complex,
    scarf_ranks,
    is_simplicial,
    yuzvinsky_condition,
    dominance_hypothesis,
    compare,
)

__all__ = [
    'taylor_ranks',
    'lyubeznik_vL',
    'lyubeznik_mL',
    'lyubeznik_matching',
    'lyubeznik_ranks',
    'scarf_complex',
    'scarf_ranks',
    'is_simplicial',
    'yuzvinsky_condition',
    'dominance_hypothesis',
    'compare',
]
