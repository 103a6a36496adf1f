"""
Order Search Component

Exhaustive and random searches over generator orders for bridge-friendly
and bridge-minimal certificates, with dihedral reduction for cycles.
"""

from .search import (
    Verdict,
    SearchBudget,
    SearchReport,
    search_friendly,
    search_minimal,
    cycle_symmetry_reduction,
    reduced_order_count,
    is_cycle_listing,
)

__all__ = [
    'Verdict',
    'SearchBudget',
    'SearchReport',
    'search_friendly',
    'search_minimal',
    'cycle_symmetry_reduction',
    'reduced_order_count',
    'is_cycle_listing',
]
