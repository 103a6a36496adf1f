"""
Morse Complex Component

Gradient flows, the Morse differential, minimality verdicts and Betti
candidates from critical symbols.
"""

from .morse import (
    GradientFlows,
    MorseDifferential,
    edge_weight,
    gradient_flow,
    differential,
    taylor_differential,
    is_minimal,
    unit_entries,
    lcm_adjacency_ok,
    lcm_distinct_across_levels,
    betti_from_criticals,
    is_bridge_minimal,
    criticals_closed_under_subsets,
    taylor_subcomplex_coincides,
    resolution_report,
)

__all__ = [
    'GradientFlows',
    'MorseDifferential',
    'edge_weight',
    'gradient_flow',
    'differential',
    'taylor_differential',
    'is_minimal',
    'unit_entries',
    'lcm_adjacency_ok',
    'lcm_distinct_across_levels',
    'betti_from_criticals',
    'is_bridge_minimal',
    'criticals_closed_under_subsets',
    'taylor_subcomplex_coincides',
    'resolution_report',
]
