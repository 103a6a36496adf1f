"""
Matching Engine Component

The bridge-matching algorithm (batched and eager), matching validation,
critical symbols, run-based classification and the Morse digraph.
"""

from .engine import (
    Matching,
    MatchingReport,
    matched_symbols,
    matching_from_json,
    matching_to_json,
    bridge_matching,
    bridge_matching_eager,
    validate_matching,
    require_valid,
    critical_symbols,
    critical_counts,
    classify_by_run,
    pruned_sources,
    is_bridge_friendly,
    friendliness_report,
    morse_digraph,
)

__all__ = [
    'Matching',
    'MatchingReport',
    'matched_symbols',
    'matching_from_json',
    'matching_to_json',
    'bridge_matching',
    'bridge_matching_eager',
    'validate_matching',
    'require_valid',
    'critical_symbols',
    'critical_counts',
    'classify_by_run',
    'pruned_sources',
    'is_bridge_friendly',
    'friendliness_report',
    'morse_digraph',
]
