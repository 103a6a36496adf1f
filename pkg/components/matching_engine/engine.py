"""
Bridge matchings on the Taylor simplex

Two variants of the same algorithm:

- bridge_matching: batched. Walk Ω (all symbols of cardinality >= 3) from
  the top cardinality down; each unvisited σ with a bridge gets the edge
  σ → σ∖sbridge(σ) and its target leaves Ω. Afterwards, edges sharing a
  target are pruned to the one with the >_I-smallest sbridge.
- bridge_matching_eager: the same walk, pruning each conflict the moment
  the second edge arrives.

Both produce the same matching. Targets live one level below their
sources, so the within-level processing order does not matter.
"""

from __future__ import annotations

import logging
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field

import networkx as nx

from components.bridge_theory import SymbolClass, check_friendliness_criterion
from components.ideal_core import GenOrder
from components.taylor_symbols import bits, complex_for, masks_of_cardinality, popcount
from lib.config import get
from lib.errors import EngineError, MatchingError, require_capacity
from lib.logging_config import kvlog

logger = logging.getLogger(__name__)


# =============================================================================
# Matching value
# =============================================================================

@dataclass
class Matching:
    """
    Set of directed edges (source → target) with target = source minus one generator

    pairs keeps the edges as given (hand-built matchings may be invalid);
    source_index / target_index are the lookups used by everything else.
    """

    n: int
    pairs: tuple[tuple[int, int], ...]
    potential_sources: frozenset = frozenset()
    source_index: dict = field(default_factory=dict, repr=False)
    target_index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.pairs = tuple(sorted(self.pairs))
        self.source_index = {s: t for s, t in self.pairs}
        self.target_index = {t: s for s, t in self.pairs}
        self.potential_sources = frozenset(self.potential_sources)

    @classmethod
    def from_pairs(cls, n, pairs, potential_sources=None):
        pairs = list(pairs)
        if potential_sources is None:
            potential_sources = {s for s, _ in pairs}
        return cls(n, tuple(pairs), frozenset(potential_sources))

    @classmethod
    def empty(cls, n):
        return cls(n, ())

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    @property
    def sources(self):
        return set(self.source_index)

    @property
    def targets(self):
        return set(self.target_index)

    def is_matched(self, sigma):
        return sigma in self.source_index or sigma in self.target_index

    def partner(self, sigma):
        if sigma in self.source_index:
            return self.source_index[sigma]
        return self.target_index.get(sigma)

    @staticmethod
    def removed_generator(source, target):
        return (source ^ target).bit_length() - 1

    def to_json(self):
        return {
            'edges': [
                {'source': bits(s), 'target': bits(t), 'sbridge': self.removed_generator(s, t)}
                for s, t in self.pairs
            ],
        }


def matched_symbols(A: Matching) -> set[int]:
    """V_A: every symbol appearing in an edge"""
    out = set()
    for s, t in A.pairs:
        out.add(s)
        out.add(t)
    return out


def matching_from_json(data, n) -> Matching:
    """Rebuild a matching from its report JSON ({"edges": [...]})"""
    pairs = []
    for edge in data.get('edges', []):
        s = 0
        for g in edge['source']:
            s |= 1 << g
        t = 0
        for g in edge['target']:
            t |= 1 << g
        pairs.append((s, t))
    potential = None
    if 'potential_sources' in data:
        potential = set()
        for sym in data['potential_sources']:
            m = 0
            for g in sym:
                m |= 1 << g
            potential.add(m)
    return Matching.from_pairs(n, pairs, potential)


# =============================================================================
# Algorithms
# =============================================================================

def _levels(n, rng):
    for k in range(n, 2, -1):
        level = list(masks_of_cardinality(n, k))
        if rng is not None:
            rng.shuffle(level)
        yield k, level


def bridge_matching(I, ord: GenOrder, rng: random.Random | None = None) -> Matching:
    """
    Batched bridge matching

    Args:
        I: MonomialIdeal or TaylorComplex
        ord: generator order (perm[0] largest)
        rng: optional shuffler for the within-level order (result is unchanged)

    Returns:
        Matching with potential_sources = every source added before pruning
    """
    start = time.time()
    T = complex_for(I)
    ord.check_size(T.n)
    pos = ord.pos

    groups = defaultdict(list)
    taken = set()
    for _, level in _levels(T.n, rng):
        next_taken = set()
        for sigma in level:
            if sigma in taken:
                continue
            b = ord.smallest(T.bridges(sigma))
            if b is None:
                continue
            target = sigma ^ (1 << b)
            next_taken.add(target)
            groups[target].append((sigma, b))
        taken = next_taken

    potential = set()
    pairs = []
    for target, members in groups.items():
        for sigma, _ in members:
            potential.add(sigma)
        sigma, _ = max(members, key=lambda m: pos[m[1]])
        pairs.append((sigma, target))

    A = Matching.from_pairs(T.n, pairs, potential)
    kvlog(logger, logging.DEBUG, op='bridge_matching', n=T.n, order=str(ord), edges=len(A),
          potential=len(potential), duration_ms=int((time.time() - start) * 1000))
    return A


def bridge_matching_eager(I, ord: GenOrder, rng: random.Random | None = None) -> Matching:
    """Bridge matching with conflicts resolved as soon as they appear"""
    T = complex_for(I)
    ord.check_size(T.n)
    pos = ord.pos

    by_target: dict[int, tuple[int, int]] = {}
    potential = set()
    taken = set()
    for _, level in _levels(T.n, rng):
        next_taken = set()
        for sigma in level:
            if sigma in taken:
                continue
            b = ord.smallest(T.bridges(sigma))
            if b is None:
                continue
            target = sigma ^ (1 << b)
            potential.add(sigma)
            next_taken.add(target)
            current = by_target.get(target)
            if current is None or pos[b] > pos[current[1]]:
                by_target[target] = (sigma, b)
        taken = next_taken

    pairs = [(sigma, target) for target, (sigma, _) in by_target.items()]
    return Matching.from_pairs(T.n, pairs, potential)


# =============================================================================
# Validation
# =============================================================================

@dataclass
class MatchingReport:
    """Outcome of validate_matching; witness explains the first failure"""

    facets_ok: bool = True
    matching_ok: bool = True
    homogeneous_ok: bool = True
    acyclic_ok: bool = True
    sbridge_consistent: bool | None = None
    witness: dict | None = None

    @property
    def ok(self):
        return self.facets_ok and self.matching_ok and self.homogeneous_ok and self.acyclic_ok

    def to_json(self):
        return {
            'ok': self.ok,
            'facets': self.facets_ok,
            'matching': self.matching_ok,
            'homogeneous': self.homogeneous_ok,
            'acyclic': self.acyclic_ok,
            'sbridge_consistent': self.sbridge_consistent,
            'witness': self.witness,
        }


def _reduced_morse_graph(A: Matching) -> nx.DiGraph:
    """
    Matched edges as nodes (named by source); s → s′ when s reaches the target of s′ by a down-step

    Paths in G^A alternate between two levels, so any directed cycle of G^A
    shows up here.
    """
    G = nx.DiGraph()
    for s, t in A.pairs:
        G.add_node(s)
        for g in bits(s):
            u = s ^ (1 << g)
            if u != t and u in A.target_index:
                G.add_edge(s, A.target_index[u])
    return G


def validate_matching(A: Matching, I, ord: GenOrder | None = None) -> MatchingReport:
    """
    Check the facet shape, matching, lcm-homogeneity and acyclicity axioms

    With ord given, also reports whether every target is source∖sbridge(source).
    """
    T = complex_for(I)
    report = MatchingReport()

    for s, t in A.pairs:
        if t & ~s or popcount(s) != popcount(t) + 1:
            report.facets_ok = False
            report.witness = {'reason': 'not a facet edge', 'source': bits(s), 'target': bits(t)}
            return report

    seen = {}
    for s, t in A.pairs:
        for sym in (s, t):
            if sym in seen:
                report.matching_ok = False
                report.witness = {
                    'reason': 'symbol in two edges', 'symbol': bits(sym),
                    'edges': [[bits(x) for x in seen[sym]], [bits(s), bits(t)]],
                }
                return report
            seen[sym] = (s, t)

    for s, t in A.pairs:
        if not T.same_lcm(s, t):
            report.homogeneous_ok = False
            report.witness = {'reason': 'lcm differs', 'source': bits(s), 'target': bits(t)}
            return report

    G = _reduced_morse_graph(A)
    try:
        cycle = nx.find_cycle(G)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        report.acyclic_ok = False
        report.witness = {'reason': 'directed cycle', 'sources': [bits(u) for u, _ in cycle]}
        return report

    if ord is not None:
        report.sbridge_consistent = all(
            ord.smallest(T.bridges(s)) == Matching.removed_generator(s, t) for s, t in A.pairs
        )
    return report


def require_valid(A: Matching, I) -> None:
    report = validate_matching(A, I)
    if not report.ok:
        raise MatchingError(f"Invalid matching: {report.witness}", report)


# =============================================================================
# Critical cells and classes
# =============================================================================

def critical_symbols(A: Matching, I) -> dict[int, list[int]]:
    """
    Symbols in no edge, grouped by cardinality (0..n), ascending masks

    The empty symbol is the rank-0 cell.
    """
    T = complex_for(I)
    require_capacity('critical enumeration generators', T.n, get('capacity.full_enumeration', 22))
    crit = {k: [] for k in range(T.n + 1)}
    src, tgt = A.source_index, A.target_index
    for sigma in range(T.full + 1):
        if sigma not in src and sigma not in tgt:
            crit[popcount(sigma)].append(sigma)
    return crit


def critical_counts(crit: dict[int, list[int]]) -> tuple[int, ...]:
    """Counts per cardinality with trailing zeros trimmed"""
    counts = [len(crit.get(k, [])) for k in range(max(crit) + 1)] if crit else [0]
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def classify_by_run(A: Matching) -> dict[int, SymbolClass]:
    """
    Class of every symbol from the matching run

    Sources are type-2, targets type-1, pruned potential sources
    potentially-type-2 only, everything else critical.
    """
    classes = {}
    for sigma in range(1 << A.n):
        if sigma in A.source_index:
            classes[sigma] = SymbolClass.TYPE2
        elif sigma in A.target_index:
            classes[sigma] = SymbolClass.TYPE1
        elif sigma in A.potential_sources:
            classes[sigma] = SymbolClass.POTENTIAL_TYPE2_ONLY
        else:
            classes[sigma] = SymbolClass.CRITICAL
    return classes


def pruned_sources(A: Matching) -> set[int]:
    return set(A.potential_sources) - set(A.source_index)


def is_bridge_friendly(I, ord: GenOrder, A: Matching | None = None) -> bool:
    """Every potentially-type-2 symbol is type-2"""
    if A is None:
        A = bridge_matching(I, ord)
    return not pruned_sources(A)


def friendliness_report(I, ord: GenOrder) -> dict:
    """
    Run-based verdict next to the structural criterion

    Raises:
        EngineError: the two verdicts disagree
    """
    A = bridge_matching(I, ord)
    cert = check_friendliness_criterion(I, ord)
    pruned = sorted(pruned_sources(A))
    verdict = not pruned
    if verdict != cert.friendly:
        kvlog(logger, logging.ERROR, op='friendliness', order=str(ord), run=verdict, criterion=cert.friendly)
        raise EngineError(f"Friendliness verdicts disagree on order {ord}: run={verdict} criterion={cert.friendly}")
    return {
        'order': list(ord.perm),
        'friendly': verdict,
        'pruned_sources': [bits(s) for s in pruned],
        'criterion': cert.to_json(),
    }


# =============================================================================
# Morse digraph
# =============================================================================

def morse_digraph(A: Matching, I) -> nx.DiGraph:
    """
    G^A: the base digraph with every matched edge reversed

    Nodes are masks; edge attribute 'matched' marks reversed edges.
    """
    T = complex_for(I)
    require_capacity('Morse digraph generators', T.n, get('capacity.full_enumeration', 22))
    G = nx.DiGraph()
    G.add_nodes_from(range(T.full + 1))
    for sigma in range(1, T.full + 1):
        for g in bits(sigma):
            u = sigma ^ (1 << g)
            if A.source_index.get(sigma) == u:
                G.add_edge(u, sigma, matched=True)
            else:
                G.add_edge(sigma, u, matched=False)
    return G


def matching_to_json(A: Matching, I, include_classes=False) -> dict:
    crit = critical_symbols(A, I)
    out = A.to_json()
    out['potential_sources'] = [bits(s) for s in sorted(A.potential_sources)]
    out['critical'] = [bits(s) for k in sorted(crit) for s in crit[k]]
    out['critical_counts'] = list(critical_counts(crit))
    if include_classes:
        classes = classify_by_run(A)
        out['classes'] = {
            ','.join(str(g) for g in bits(s)) or '{}': str(c)
            for s, c in sorted(classes.items())
            if c is not SymbolClass.CRITICAL
        }
    return out
