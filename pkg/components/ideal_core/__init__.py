"""
Ideal Core Component

Monomials, monomial ideals with minimal generators, and generator orders.
"""

from .monomials import (
    RingContext,
    Monomial,
    MonomialIdeal,
    GenOrder,
    lcm,
    lcm_all,
    divides,
    parse_monomial,
    format_monomial,
    minimize_generators,
    ideal_from_exponents,
    embed,
    restrict_context,
    ideal_sum,
    intersect,
)
from .io import (
    parse_ideal_text,
    parse_ideal_json,
    load_ideal,
    ideal_to_text,
    ideal_to_json,
)

__all__ = [
    'RingContext',
    'Monomial',
    'MonomialIdeal',
    'GenOrder',
    'lcm',
    'lcm_all',
    'divides',
    'parse_monomial',
    'format_monomial',
    'minimize_generators',
    'ideal_from_exponents',
    'embed',
    'restrict_context',
    'ideal_sum',
    'intersect',
    'parse_ideal_text',
    'parse_ideal_json',
    'load_ideal',
    'ideal_to_text',
    'ideal_to_json',
]
