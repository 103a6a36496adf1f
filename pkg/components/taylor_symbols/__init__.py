"""
Taylor Symbols Component

Subsets of the minimal generators as bitmasks, their lcms, incidence signs,
the base digraph, and the shared TaylorComplex cache.
"""

from .symbols import (
    TaylorComplex,
    complex_for,
    BaseDigraph,
    popcount,
    bits,
    symbol,
    format_symbol,
    parse_symbol,
    symbol_to_json,
    symbol_from_json,
    masks_of_cardinality,
    symbol_lcm,
    enumerate_symbols,
    incidence,
    base_digraph,
)

__all__ = [
    'TaylorComplex',
    'complex_for',
    'BaseDigraph',
    'popcount',
    'bits',
    'symbol',
    'format_symbol',
    'parse_symbol',
    'symbol_to_json',
    'symbol_from_json',
    'masks_of_cardinality',
    'symbol_lcm',
    'enumerate_symbols',
    'incidence',
    'base_digraph',
]
