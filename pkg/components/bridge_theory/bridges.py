"""
Bridges, gaps and true gaps of Taylor symbols

Every function accepts either a MonomialIdeal or a prebuilt TaylorComplex;
passing the complex avoids recomputing lcms when many orders are analyzed
on one ideal.

"Dominates" is strict: m dominates m′ iff m >_I m′.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

from components.ideal_core import GenOrder
from components.taylor_symbols import bits, complex_for, popcount

logger = logging.getLogger(__name__)


class SymbolClass(enum.Enum):
    TYPE1 = 'type1'
    TYPE2 = 'type2'
    POTENTIAL_TYPE2_ONLY = 'potential_type2_only'
    CRITICAL = 'critical'

    def __str__(self):
        return self.value


def is_bridge(g: int, sigma: int, I) -> bool:
    """g ∈ σ and lcm(σ∖g) = lcm(σ)"""
    return complex_for(I).is_bridge(g, sigma)


def is_gap(g: int, sigma: int, I) -> bool:
    """g ∉ σ and lcm(σ∪g) = lcm(σ)"""
    return complex_for(I).is_gap(g, sigma)


def sbridge(sigma: int, I, ord: GenOrder):
    """>_I-smallest bridge of σ, or None"""
    return ord.smallest(complex_for(I).bridges(sigma))


def is_true_gap(g: int, sigma: int, I, ord: GenOrder) -> bool:
    """
    g is a gap of σ and every bridge of σ∪g dominated by g is already a bridge of σ
    """
    T = complex_for(I)
    if not T.is_gap(g, sigma):
        return False
    own = T.bridges(sigma)
    pos_g = ord.pos[g]
    for b in T.bridges(sigma | (1 << g)):
        if ord.pos[b] > pos_g and b not in own:
            return False
    return True


def true_gaps(sigma: int, I, ord: GenOrder) -> list[int]:
    T = complex_for(I)
    return [g for g in T.gaps(sigma) if is_true_gap(g, sigma, T, ord)]


def _dominates_any(ord, a, others):
    pa = ord.pos[a]
    return any(pa < ord.pos[o] for o in others)


def is_type1(sigma: int, I, ord: GenOrder) -> bool:
    """σ has a true gap not dominating any of its bridges"""
    T = complex_for(I)
    bridges = T.bridges(sigma)
    return any(not _dominates_any(ord, g, bridges) for g in true_gaps(sigma, T, ord))


def is_potentially_type2(sigma: int, I, ord: GenOrder) -> bool:
    """σ has a bridge not dominating any of its true gaps"""
    T = complex_for(I)
    bridges = T.bridges(sigma)
    if not bridges:
        return False
    gaps = true_gaps(sigma, T, ord)
    return any(not _dominates_any(ord, b, gaps) for b in bridges)


def classify_structural(sigma: int, I, ord: GenOrder) -> SymbolClass:
    """
    Classify σ from bridges and true gaps alone, without running the matching

    Among potentially-type-2 symbols sharing σ∖sbridge(σ), only the one whose
    sbridge is >_I-smallest is type-2.
    """
    T = complex_for(I)
    if is_type1(sigma, T, ord):
        return SymbolClass.TYPE1
    if not is_potentially_type2(sigma, T, ord):
        return SymbolClass.CRITICAL

    b = sbridge(sigma, T, ord)
    target = sigma ^ (1 << b)
    pos_b = ord.pos[b]
    for h in range(T.n):
        if target >> h & 1 or h == b or ord.pos[h] <= pos_b:
            continue
        tau = target | (1 << h)
        if sbridge(tau, T, ord) == h and is_potentially_type2(tau, T, ord):
            return SymbolClass.POTENTIAL_TYPE2_ONLY
    return SymbolClass.TYPE2


@dataclass
class FriendlinessCertificate:
    """Outcome of the friendliness criterion; sigma/gap set on failure"""

    friendly: bool
    sigma: int | None = None
    gap: int | None = None
    checked: int = 0

    def to_json(self):
        out = {'friendly': self.friendly, 'checked': self.checked}
        if not self.friendly:
            out['witness'] = {'symbol': bits(self.sigma), 'gap': self.gap}
        return out


def check_friendliness_criterion(I, ord: GenOrder) -> FriendlinessCertificate:
    """
    For every potentially-type-2 σ with b = sbridge(σ): each true gap m of σ∖b
    with b >_I m must be a true gap of σ.

    Returns the first failing (σ, m) in ascending mask order.
    """
    T = complex_for(I)
    checked = 0
    for sigma in range(1, T.full + 1):
        if popcount(sigma) < 3 or not T.bridges(sigma):
            continue
        if not is_potentially_type2(sigma, T, ord):
            continue
        checked += 1
        b = sbridge(sigma, T, ord)
        rest = sigma ^ (1 << b)
        for m in true_gaps(rest, T, ord):
            if ord.dominates(b, m) and not is_true_gap(m, sigma, T, ord):
                return FriendlinessCertificate(False, sigma, m, checked)
    return FriendlinessCertificate(True, checked=checked)
