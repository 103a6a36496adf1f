"""
Taylor, Lyubeznik and Scarf constructions, and the Yuzvinsky condition

Lyubeznik is built in its matching form: for a symbol σ listed descending
m_1 >_I ... >_I m_q, v_L(σ) is the largest k such that some generator
strictly below m_k divides lcm(m_1, ..., m_k), and m_L(σ) is the >_I-least
generator dividing lcm(m_1, ..., m_{v_L}). The matching pairs σ∪m_L with
σ∖m_L.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from math import comb

from components.ideal_core import GenOrder
from components.matching_engine import (
    Matching, bridge_matching, critical_counts, critical_symbols,
)
from components.taylor_symbols import bits, complex_for, popcount
from lib.config import get
from lib.errors import require_capacity
from lib.logging_config import kvlog

logger = logging.getLogger(__name__)


def _trim(counts):
    counts = list(counts)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def taylor_ranks(I) -> tuple[int, ...]:
    """ranks[r] = C(n, r)"""
    n = I.n
    return tuple(comb(n, r) for r in range(n + 1))


def _divisors_below(T, exps, pos_floor, ord):
    """Generators strictly below position pos_floor dividing exps"""
    for g in range(T.n):
        if ord.pos[g] > pos_floor and all(a <= b for a, b in zip(T.lcm_exps(1 << g), exps)):
            yield g


def lyubeznik_vL(sigma: int, I, ord: GenOrder):
    """Largest k with a generator below m_k dividing lcm(m_1..m_k); None for −∞"""
    T = complex_for(I)
    desc = ord.descending(bits(sigma))
    prefix = 0
    prefixes = []
    for g in desc:
        prefix |= 1 << g
        prefixes.append(prefix)
    for k in range(len(desc), 0, -1):
        exps = T.lcm_exps(prefixes[k - 1])
        if next(_divisors_below(T, exps, ord.pos[desc[k - 1]], ord), None) is not None:
            return k
    return None


def lyubeznik_mL(sigma: int, I, ord: GenOrder):
    """>_I-least generator dividing lcm(m_1..m_{v_L}); None when v_L = −∞"""
    T = complex_for(I)
    k = lyubeznik_vL(sigma, T, ord)
    if k is None:
        return None
    prefix = 0
    for g in ord.descending(bits(sigma))[:k]:
        prefix |= 1 << g
    exps = T.lcm_exps(prefix)
    divisors = [g for g in range(T.n) if all(a <= b for a, b in zip(T.lcm_exps(1 << g), exps))]
    return ord.smallest(divisors)


def lyubeznik_matching(I, ord: GenOrder) -> Matching:
    """Deduplicated pairs (σ ∪ m_L(σ), σ ∖ m_L(σ)) over symbols with finite v_L"""
    T = complex_for(I)
    ord.check_size(T.n)
    require_capacity('Lyubeznik enumeration generators', T.n, get('capacity.full_enumeration', 22))
    pairs = set()
    for sigma in range(1, T.full + 1):
        m = lyubeznik_mL(sigma, T, ord)
        if m is None:
            continue
        source = sigma | (1 << m)
        pairs.add((source, source ^ (1 << m)))
    A = Matching.from_pairs(T.n, pairs)
    kvlog(logger, logging.DEBUG, op='lyubeznik_matching', n=T.n, order=str(ord), edges=len(A))
    return A


def lyubeznik_ranks(I, ord: GenOrder) -> tuple[int, ...]:
    A = lyubeznik_matching(I, ord)
    return critical_counts(critical_symbols(A, I))


def scarf_complex(I) -> dict[int, list[int]]:
    """Symbols whose lcm no other symbol attains, grouped by cardinality"""
    T = complex_for(I)
    require_capacity('Scarf enumeration generators', T.n, get('capacity.full_enumeration', 22))
    groups = defaultdict(list)
    for sigma in range(T.full + 1):
        groups[T.lcm_id(sigma)].append(sigma)
    out = {k: [] for k in range(T.n + 1)}
    for members in groups.values():
        if len(members) == 1:
            out[popcount(members[0])].append(members[0])
    for k in out:
        out[k].sort()
    return out


def scarf_ranks(I) -> tuple[int, ...]:
    cells = scarf_complex(I)
    return _trim(len(cells[k]) for k in range(max(cells) + 1))


def is_simplicial(cells: dict[int, list[int]]) -> bool:
    """Every facet of every cell is a cell"""
    present = {s for syms in cells.values() for s in syms}
    return all(
        (s ^ (1 << g)) in present
        for s in present for g in bits(s)
    )


def yuzvinsky_condition(I) -> bool:
    """
    For all symbols σ, τ with lcm(σ) = lcm(τ): lcm(σ ∩ τ) = lcm(σ)

    Checked per lcm group by intersecting the whole group, which is
    equivalent to the pairwise condition.
    """
    T = complex_for(I)
    require_capacity('Yuzvinsky generators', T.n, get('capacity.yuzvinsky_generators', 16))
    meet = {}
    for sigma in range(T.full + 1):
        ident = T.lcm_id(sigma)
        meet[ident] = meet.get(ident, sigma) & sigma
    return all(T.lcm_id(common) == ident for ident, common in meet.items())


def dominance_hypothesis(I, ord: GenOrder):
    """
    Check that no σ, τ with a common σ∖sbridge(σ) = τ∖sbridge(τ) have
    sbridge(τ) >_I sbridge(σ), m_L(σ) = m_L(τ) >_I sbridge(τ) and m_L(τ) ∈ τ.

    When this holds, every symbol the Lyubeznik matching pairs is paired by
    the bridge matching too.

    Returns:
        (True, None) or (False, (σ, τ))
    """
    T = complex_for(I)
    groups = defaultdict(list)
    for sigma in range(1, T.full + 1):
        b = ord.smallest(T.bridges(sigma))
        if b is not None:
            groups[sigma ^ (1 << b)].append((sigma, b))
    for members in groups.values():
        if len(members) < 2:
            continue
        for sigma, bs in members:
            ml_sigma = lyubeznik_mL(sigma, T, ord)
            if ml_sigma is None:
                continue
            for tau, bt in members:
                if tau == sigma or not ord.dominates(bt, bs):
                    continue
                ml_tau = lyubeznik_mL(tau, T, ord)
                if ml_tau == ml_sigma and ord.dominates(ml_tau, bt) and tau >> ml_tau & 1:
                    return False, (sigma, tau)
    return True, None


def compare(I, ord: GenOrder) -> dict:
    """Rank vectors of the four constructions under one order"""
    A = bridge_matching(I, ord)
    return {
        'taylor': list(taylor_ranks(I)),
        'lyubeznik': list(lyubeznik_ranks(I, ord)),
        'scarf': list(scarf_ranks(I)),
        'barile_macchia': list(critical_counts(critical_symbols(A, I))),
    }
