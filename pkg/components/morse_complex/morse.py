"""
Morse complex of an acyclic matching on the Taylor simplex

The basis in homological degree r is the critical symbols of cardinality r.
The differential of a critical σ sums, over facets σ′ of σ, the incidence
[σ:σ′] times the gradient flow from σ′ to each critical σ″ of the same
cardinality, with monomial multiplier lcm(σ)/lcm(σ″).

Gradient paths between cardinalities r-1 and r alternate: up along a
reversed matched edge (target → source), then down to another facet of
that source. A path that drops to cardinality r-2 can never reach a
critical cell of cardinality r-1, so flows from sources are empty and flows
from critical cells are the empty path.

Edge weights: a down-step σ → σ′ weighs [σ:σ′]; an up-step along a reversed
matched edge (σ′, σ) weighs −[σ′:σ].
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

import networkx as nx

from components.homology_oracle import GradedBettiTable
from components.ideal_core import GenOrder, Monomial
from components.matching_engine import (
    Matching, bridge_matching, critical_counts, critical_symbols,
)
from components.taylor_symbols import bits, complex_for, incidence, popcount
from lib.errors import InputError, MatchingError
from lib.logging_config import kvlog

logger = logging.getLogger(__name__)

COEFF_LIMIT = 2 ** 63


def edge_weight(u: int, v: int, A: Matching) -> int:
    """
    Weight of the G^A edge u → v

    Raises:
        InputError: u → v is not an edge of G^A
    """
    if A.source_index.get(v) == u:
        return -incidence(v, u)
    if popcount(u) == popcount(v) + 1 and not v & ~u:
        if A.source_index.get(u) == v:
            raise InputError(f"{bits(u)} → {bits(v)} is reversed in G^A")
        return incidence(u, v)
    raise InputError(f"{bits(u)} → {bits(v)} is not an edge of G^A")


class GradientFlows:
    """
    Memoized gradient flows for one matching

    flow(u) maps each critical symbol of u's cardinality to the signed count
    of gradient paths from u to it.
    """

    def __init__(self, A: Matching):
        self.A = A
        self._memo: dict[int, dict[int, int]] = {}
        self._prepared: set[int] = set()

    def _base(self, u):
        if u in self.A.source_index:
            return {}
        if u in self.A.target_index:
            return None
        return {u: 1}

    def _prepare(self, k):
        A = self.A
        targets = [t for t in A.target_index if popcount(t) == k]
        deps = nx.DiGraph()
        deps.add_nodes_from(targets)
        for u in targets:
            s = A.target_index[u]
            for g in bits(s):
                v = s ^ (1 << g)
                if v != u and v in A.target_index:
                    deps.add_edge(u, v)
        try:
            order = list(nx.topological_sort(deps))
        except nx.NetworkXUnfeasible:
            raise MatchingError(f"Matching is not acyclic at cardinality {k}") from None

        for u in reversed(order):
            s = A.target_index[u]
            up = -incidence(s, u)
            acc: dict[int, int] = {}
            for g in bits(s):
                v = s ^ (1 << g)
                if v == u:
                    continue
                sub = self._memo.get(v)
                if sub is None:
                    sub = self._base(v)
                if not sub:
                    continue
                w = up * incidence(s, v)
                for crit, c in sub.items():
                    acc[crit] = acc.get(crit, 0) + w * c
            flow = {crit: c for crit, c in acc.items() if c}
            for c in flow.values():
                if abs(c) >= COEFF_LIMIT:
                    raise MatchingError(f"Gradient flow coefficient {c} exceeds 63 bits")
            self._memo[u] = flow
        self._prepared.add(k)

    def flow(self, u: int) -> dict[int, int]:
        base = self._base(u)
        if base is not None:
            return base
        k = popcount(u)
        if k not in self._prepared:
            self._prepare(k)
        return self._memo[u]


def gradient_flow(start: int, A: Matching) -> dict[int, int]:
    """Σ over gradient paths from start to each critical symbol of its cardinality"""
    return GradientFlows(A).flow(start)


# =============================================================================
# Differential
# =============================================================================

@dataclass
class MorseDifferential:
    """
    Matrices of the Morse complex

    entries[r] maps (row, col) → nonzero integer coefficient, where col is a
    critical symbol of cardinality r and row one of cardinality r-1. The
    monomial multiplier of an entry is lcm(col)/lcm(row).
    """

    complex: object
    criticals: dict[int, list[int]]
    entries: dict[int, dict[tuple[int, int], int]] = field(default_factory=dict)

    @property
    def n(self):
        return self.complex.n

    @property
    def ranks(self) -> tuple[int, ...]:
        return critical_counts(self.criticals)

    def multiplier(self, row: int, col: int) -> Monomial:
        T = self.complex
        return T.lcm(col).quotient(T.lcm(row))

    def is_unit_entry(self, row: int, col: int) -> bool:
        return self.complex.same_lcm(row, col)

    def matrix(self, r: int) -> list[tuple[int, int, int, Monomial]]:
        """Triplets (row index, col index, coeff, monomial) for ∂_r"""
        rows = {m: i for i, m in enumerate(self.criticals.get(r - 1, []))}
        cols = {m: j for j, m in enumerate(self.criticals.get(r, []))}
        out = []
        for (row, col), c in sorted(self.entries.get(r, {}).items(), key=lambda e: (cols[e[0][1]], rows[e[0][0]])):
            out.append((rows[row], cols[col], c, self.multiplier(row, col)))
        return out

    def square_is_zero(self):
        """
        ∂_r ∘ ∂_{r+1} = 0 with monomial bookkeeping

        Every product term from col c to row a carries lcm(c)/lcm(a), so the
        check reduces to coefficient sums. Returns (True, None) or
        (False, (r, row, col)).
        """
        for r in sorted(self.entries):
            upper = self.entries.get(r + 1)
            lower = self.entries.get(r)
            if not upper or not lower:
                continue
            by_col: dict[int, dict[int, int]] = {}
            for (mid, col), c in upper.items():
                by_col.setdefault(col, {})[mid] = c
            lower_by_col: dict[int, list[tuple[int, int]]] = {}
            for (row, mid), c in lower.items():
                lower_by_col.setdefault(mid, []).append((row, c))
            for col, mids in by_col.items():
                acc: dict[int, int] = {}
                for mid, c in mids.items():
                    for row, d in lower_by_col.get(mid, []):
                        acc[row] = acc.get(row, 0) + c * d
                for row, total in acc.items():
                    if total:
                        return False, (r, row, col)
        return True, None

    def to_json(self):
        out = {'ranks': list(self.ranks), 'matrices': {}}
        for r in sorted(self.entries):
            out['matrices'][str(r)] = [
                {'row': i, 'col': j, 'coeff': c, 'monomial': str(m)}
                for i, j, c, m in self.matrix(r)
            ]
        out['criticals'] = {str(k): [bits(s) for s in v] for k, v in self.criticals.items() if v}
        return out


def differential(A: Matching, I) -> MorseDifferential:
    """Build the Morse differential of a validated matching"""
    start = time.time()
    T = complex_for(I)
    crit = critical_symbols(A, T)
    flows = GradientFlows(A)
    D = MorseDifferential(T, crit)
    for r in range(1, T.n + 1):
        cols = crit.get(r, [])
        if not cols:
            continue
        block: dict[tuple[int, int], int] = {}
        for col in cols:
            for g in bits(col):
                facet = col ^ (1 << g)
                c = incidence(col, facet)
                for row, k in flows.flow(facet).items():
                    key = (row, col)
                    block[key] = block.get(key, 0) + c * k
        D.entries[r] = {key: c for key, c in block.items() if c}
    kvlog(logger, logging.DEBUG, op='differential', n=T.n, ranks=D.ranks,
          duration_ms=int((time.time() - start) * 1000))
    return D


def taylor_differential(I) -> MorseDifferential:
    return differential(Matching.empty(complex_for(I).n), I)


# =============================================================================
# Verdicts
# =============================================================================

def is_minimal(D: MorseDifferential) -> bool:
    """No nonzero entry with constant monomial part"""
    for block in D.entries.values():
        for (row, col), c in block.items():
            if c and D.is_unit_entry(row, col):
                return False
    return True


def unit_entries(D: MorseDifferential) -> list[tuple[int, int, int, int]]:
    """(r, row, col, coeff) for every nonzero constant entry"""
    out = []
    for r, block in sorted(D.entries.items()):
        for (row, col), c in sorted(block.items()):
            if c and D.is_unit_entry(row, col):
                out.append((r, row, col, c))
    return out


def lcm_adjacency_ok(A: Matching, I) -> bool:
    """
    Sufficient minimality test: no critical σ and critical facet σ′ share an lcm
    """
    T = complex_for(I)
    for sigma in range(1, T.full + 1):
        if A.is_matched(sigma):
            continue
        for g in bits(sigma):
            facet = sigma ^ (1 << g)
            if not A.is_matched(facet) and T.same_lcm(sigma, facet):
                return False
    return True


def lcm_distinct_across_levels(A: Matching, I) -> bool:
    """No critical σ and critical σ′ with |σ′| = |σ| - 1 share an lcm (containment not required)"""
    T = complex_for(I)
    crit = critical_symbols(A, T)
    for r in range(1, T.n + 1):
        lower = {T.lcm_id(s) for s in crit.get(r - 1, [])}
        if any(T.lcm_id(s) in lower for s in crit.get(r, [])):
            return False
    return True


def betti_from_criticals(A: Matching, I) -> GradedBettiTable:
    """Counts of critical symbols by (cardinality, lcm): upper bounds for β"""
    T = complex_for(I)
    crit = critical_symbols(A, T)
    table = GradedBettiTable(T.ideal.ctx)
    for r, syms in crit.items():
        for s in syms:
            table.add(r, T.lcm_exps(s))
    return table


def is_bridge_minimal(I, ord: GenOrder) -> bool:
    """Bridge-matching Morse resolution is minimal (integer coefficients, char 0)"""
    return is_minimal(differential(bridge_matching(I, ord), I))


def criticals_closed_under_subsets(A: Matching, I=None) -> bool:
    """Critical symbols form a simplicial complex (facet closure suffices)"""
    for sigma in range(1, 1 << A.n):
        if A.is_matched(sigma):
            continue
        for g in bits(sigma):
            if A.is_matched(sigma ^ (1 << g)):
                return False
    return True


def taylor_subcomplex_coincides(A: Matching, I) -> bool:
    """Every Morse entry equals the Taylor incidence between the two critical symbols"""
    D = differential(A, I)
    for r, cols in D.criticals.items():
        if r == 0:
            continue
        expected = {}
        for col in cols:
            for g in bits(col):
                facet = col ^ (1 << g)
                if not A.is_matched(facet):
                    expected[(facet, col)] = incidence(col, facet)
        if expected != D.entries.get(r, {}):
            return False
    return True


def resolution_report(A: Matching, I) -> dict:
    """Ranks, minimality verdicts and matrices for the resolution command"""
    D = differential(A, I)
    zero, witness = D.square_is_zero()
    report = D.to_json()
    report['minimal'] = is_minimal(D)
    report['lcm_adjacency'] = lcm_adjacency_ok(A, I)
    report['lcm_distinct_levels'] = lcm_distinct_across_levels(A, I)
    report['square_zero'] = zero
    if not zero:
        r, row, col = witness
        report['square_zero_witness'] = {'r': r, 'row': bits(row), 'col': bits(col)}
    return report
