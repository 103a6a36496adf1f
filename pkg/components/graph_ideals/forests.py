"""
Naturally oriented weighted forests

A forest is naturally oriented when every edge points away from the root of
its component, so every vertex has in-degree at most 1. Ranks are distances
from the roots; ties inside a rank are broken by the vertex listing order.

Blocks are maximal potential blocks: edge paths e_1, ..., e_k in which every
interior e_p divides lcm(e_{p-1}, e_{p+1}). An edge is a blockend when it
ends some block; for natural orientations that happens exactly when one of
its endpoints is a leaf or its head has weight at least 2.

Total Betti numbers are handled as coefficient tuples of a polynomial in t
(position r holds β_r).
"""

from __future__ import annotations

import logging
from itertools import combinations

import networkx as nx

from components.ideal_core import GenOrder
from components.matching_engine import bridge_matching
from components.morse_complex import betti_from_criticals
from lib.errors import GraphError
from lib.logging_config import kvlog

from .graphs import WeightedOrientedGraph, edge_ideal

logger = logging.getLogger(__name__)


# =============================================================================
# Betti polynomial helpers
# =============================================================================

def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def betti_add(a, b) -> tuple[int, ...]:
    size = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))


def betti_product(a, b) -> tuple[int, ...]:
    """
    Totals of R/(I+J) for I, J in disjoint variables

    The Betti polynomial of a disjoint sum is the product of the two.

    Example:
        >>> betti_product((1, 1), (1, 1))
        (1, 2, 1)
    """
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def koszul_shift(totals, k: int) -> tuple[int, ...]:
    """t·(1+t)^k times the Betti polynomial: the summand a colon by k free variables contributes"""
    out = (0,) + tuple(totals)
    for _ in range(k):
        out = betti_product(out, (1, 1))
    return _trim(out)


def projective_dimension(totals) -> int:
    return len(_trim(totals)) - 1


# =============================================================================
# Structure
# =============================================================================

def is_forest(D: WeightedOrientedGraph) -> bool:
    return nx.is_forest(D.undirected())


def is_naturally_oriented_forest(D: WeightedOrientedGraph) -> bool:
    return is_forest(D) and all(D.in_degree(v) <= 1 for v in D.vertices)


def _require_natural(T: WeightedOrientedGraph):
    if not is_forest(T):
        raise GraphError("Graph is not a forest")
    for v in T.vertices:
        if T.in_degree(v) > 1:
            raise GraphError(f"Forest is not naturally oriented: {v!r} has {T.in_degree(v)} incoming edges")


def roots(T: WeightedOrientedGraph) -> list[str]:
    """Vertices with outgoing edges and no incoming edge"""
    outs = {u for u, _ in T.edges}
    return [v for v in T.vertices if v in outs and T.in_degree(v) == 0]


def vertex_ranks(T: WeightedOrientedGraph) -> dict[str, int]:
    _require_natural(T)
    G = T.digraph()
    ranks = {}
    for r in roots(T):
        for v, d in nx.single_source_shortest_path_length(G, r).items():
            ranks[v] = d
    return ranks


def natural_forest_order(T: WeightedOrientedGraph) -> GenOrder:
    """
    Edges sorted by the rank of their upper endpoint, then by vertex labels

    Raises:
        GraphError: T is not a forest, or some vertex has two incoming edges
    """
    ranks = vertex_ranks(T)

    def key(g):
        u, v = T.edges[g]
        return ranks[u], T.index(u), T.index(v)

    return GenOrder(tuple(sorted(range(len(T.edges)), key=key)))


def _edge_path(T: WeightedOrientedGraph, G: nx.Graph, e: int, f: int):
    """Generator indices along the tree path through edges e and f"""
    a, b = T.edges[e]
    c, d = T.edges[f]
    longest = None
    for s in (a, b):
        for t in (c, d):
            try:
                p = nx.shortest_path(G, s, t)
            except nx.NetworkXNoPath:
                return None
            if longest is None or len(p) > len(longest):
                longest = p
    return [G.edges[longest[i], longest[i + 1]]['gen'] for i in range(len(longest) - 1)]


def is_potential_block(path, gens) -> bool:
    """Every interior generator divides the lcm of its two path neighbors"""
    for p in range(1, len(path) - 1):
        left, mid, right = gens[path[p - 1]], gens[path[p]], gens[path[p + 1]]
        if not mid.divides(left.lcm(right)):
            return False
    return True


def blocks_forest(T: WeightedOrientedGraph) -> list[tuple[int, ...]]:
    """
    Maximal potential blocks, each as generator indices in path order

    A component made of a single edge is its own block.
    """
    if not is_forest(T):
        raise GraphError("Graph is not a forest")
    gens = edge_ideal(T).ideal.gens
    G = T.undirected()
    candidates = []
    for e, f in combinations(range(len(T.edges)), 2):
        path = _edge_path(T, G, e, f)
        if path is not None and is_potential_block(path, gens):
            candidates.append(tuple(path))
    for e, (u, v) in enumerate(T.edges):
        if G.degree(u) == 1 and G.degree(v) == 1:
            candidates.append((e,))

    sets = [frozenset(p) for p in candidates]
    maximal = []
    seen = set()
    for p, s in zip(candidates, sets):
        if s in seen or any(s < other for other in sets):
            continue
        seen.add(s)
        maximal.append(p if p[0] <= p[-1] else tuple(reversed(p)))
    return sorted(maximal)


def blockends_forest(T: WeightedOrientedGraph) -> list[int]:
    """Edges with a leaf endpoint or a head of weight at least 2"""
    _require_natural(T)
    G = T.undirected()
    return [
        g for g, (u, v) in enumerate(T.edges)
        if G.degree(u) == 1 or G.degree(v) == 1 or T.w(v) >= 2
    ]


def blockends_from_blocks(T: WeightedOrientedGraph) -> list[int]:
    """Blockends read off the ends of the maximal blocks"""
    ends = set()
    for block in blocks_forest(T):
        ends.add(block[0])
        ends.add(block[-1])
    return sorted(ends)


# =============================================================================
# Block-based bridges and gaps
# =============================================================================

class ForestBlocks:
    """Block membership and incidence for evaluating the block predicates"""

    def __init__(self, T: WeightedOrientedGraph):
        self.T = T
        self.blocks = [frozenset(b) for b in blocks_forest(T)]
        self.at = {v: set() for v in T.vertices}
        for g, (u, v) in enumerate(T.edges):
            self.at[u].add(g)
            self.at[v].add(g)

    def _same_block(self, *gens) -> bool:
        return any(all(g in b for g in gens) for b in self.blocks)

    def spans(self, g: int, sigma: int) -> bool:
        """σ has an edge at each endpoint of g, with those two edges and g in one block"""
        u, v = self.T.edges[g]
        left = [e for e in self.at[u] if e != g and sigma >> e & 1]
        right = [e for e in self.at[v] if e != g and sigma >> e & 1]
        return any(self._same_block(e1, g, e2) for e1 in left for e2 in right)

    def adjacent(self, g: int) -> set[int]:
        u, v = self.T.edges[g]
        return (self.at[u] | self.at[v]) - {g}


def forest_is_bridge(g: int, sigma: int, blocks: ForestBlocks) -> bool:
    return bool(sigma >> g & 1) and blocks.spans(g, sigma)


def forest_is_gap(g: int, sigma: int, blocks: ForestBlocks) -> bool:
    return not sigma >> g & 1 and blocks.spans(g, sigma)


def forest_is_true_gap(g: int, sigma: int, blocks: ForestBlocks, ord: GenOrder) -> bool:
    """
    A gap that creates no new bridge below itself

    Only edges adjacent to g can change bridge status when g joins σ.
    """
    if not forest_is_gap(g, sigma, blocks):
        return False
    grown = sigma | (1 << g)
    for f in blocks.adjacent(g):
        if not sigma >> f & 1 or ord.pos[f] <= ord.pos[g]:
            continue
        if forest_is_bridge(f, grown, blocks) and not forest_is_bridge(f, sigma, blocks):
            return False
    return True


# =============================================================================
# Recursions
# =============================================================================

def _recursion_step(T: WeightedOrientedGraph):
    """
    Pick the deepest leaf v1 (ties by label) and its parent v

    Returns (v1, v, T1, T2, effective weight of v, neighbors of v).
    """
    ranks = vertex_ranks(T)
    leaves = [x for x in T.vertices if x in ranks and ranks[x] > 0]
    v1 = max(leaves, key=lambda x: (ranks[x], -T.index(x)))
    v = next(a for a, b in T.edges if b == v1)
    w_eff = T.w(v) if T.in_degree(v) else 1
    nbrs = T.neighbors(v)
    T1 = T.remove_vertices([v1])
    T2 = T.remove_vertices([v, *nbrs])
    return v1, v, T1, T2, w_eff, nbrs


def forest_betti_recursion_total(T: WeightedOrientedGraph) -> tuple[tuple[int, ...], int]:
    """
    Total Betti numbers and projective dimension of R/I(T)

    With v1 a deepest leaf, v its parent and n = deg(v):
      w(v) = 1:  β(T) = β(T1) + t(1+t)^{n-1} β(T2),  pd = max(pd T1, n + pd T2)
      w(v) ≥ 2:  β(T) = (1+t) β(T1),                pd = pd T1 + 1
    where T1 = T∖v1 and T2 = T∖N[v].

    Returns:
        (totals, pd)
    """
    _require_natural(T)
    memo = {}

    def solve(F):
        key = frozenset(F.edges)
        if key in memo:
            return memo[key]
        if not F.edges:
            result = ((1,), 0)
        else:
            _, _, F1, F2, w_eff, nbrs = _recursion_step(F)
            b1, pd1 = solve(F1)
            if w_eff == 1:
                b2, pd2 = solve(F2)
                result = (betti_add(b1, koszul_shift(b2, len(nbrs) - 1)), max(pd1, len(nbrs) + pd2))
            else:
                result = (betti_product(b1, (1, 1)), pd1 + 1)
        memo[key] = result
        return result

    totals, pd = solve(T)
    kvlog(logger, logging.DEBUG, op='forest_recursion', edges=len(T.edges), totals=totals, pd=pd,
          subforests=len(memo))
    return totals, pd


def _engine_graded(F: WeightedOrientedGraph) -> dict[tuple[int, int], int]:
    emap = edge_ideal(F)
    A = bridge_matching(emap.ideal, natural_forest_order(F))
    return betti_from_criticals(A, emap.ideal).graded()


def forest_betti_recursion_graded(T: WeightedOrientedGraph) -> dict[tuple[int, int], int]:
    """
    Graded Betti numbers β_{r,d} of R/I(T), keyed by (r, total degree)

    With w(v) = 1 and M = N(v)∖{v1}:
        β_{r,d}(T) = β_{r,d}(T1) + Σ_{S⊆M} β_{r-1-|S|, d-d'}(T2)
    where d' = (1 + w(v1)) + Σ_{u∈S} deg(u), deg(u) = w(u) for children of v
    and 1 for its parent. Subforests whose step has w(v) ≥ 2 are solved by
    the bridge matching under the natural order, which is minimal on forests.

    Raises:
        GraphError: the top-level step has w(v) ≥ 2
    """
    _require_natural(T)
    if T.edges:
        _, _, _, _, w_eff, _ = _recursion_step(T)
        if w_eff != 1:
            raise GraphError("Graded recursion needs the parent of the deepest leaf to have weight 1")

    memo = {}

    def solve(F) -> dict:
        key = frozenset(F.edges)
        if key in memo:
            return memo[key]
        if not F.edges:
            memo[key] = {(0, 0): 1}
            return memo[key]
        v1, v, F1, F2, w_eff, nbrs = _recursion_step(F)
        if w_eff != 1:
            memo[key] = _engine_graded(F)
            return memo[key]
        out = dict(solve(F1))
        base = solve(F2)
        rest = [u for u in nbrs if u != v1]
        degs = {u: (F.w(u) if (v, u) in F.edges else 1) for u in rest}
        head = 1 + F.w(v1)
        for size in range(len(rest) + 1):
            for S in combinations(rest, size):
                shift = head + sum(degs[u] for u in S)
                for (r, d), c in base.items():
                    k = (r + 1 + size, d + shift)
                    out[k] = out.get(k, 0) + c
        memo[key] = out
        return out

    return {k: c for k, c in solve(T).items() if c}


def iron_forest(T: WeightedOrientedGraph, root: str) -> WeightedOrientedGraph:
    """
    Reorient a tree away from root; each new head takes the weight of the old head

    Raises:
        GraphError: T is not a tree, or root is not one of its vertices
    """
    if root not in T.vertices:
        raise GraphError(f"Unknown root {root!r}")
    G = T.undirected()
    G.remove_nodes_from([v for v in T.vertices if G.degree(v) == 0 and v != root])
    if not nx.is_tree(G):
        raise GraphError("iron_forest needs a tree")
    weights = {v: 1 for v in T.vertices}
    edges = []
    for parent, child in nx.bfs_edges(G, root):
        old_head = child if (parent, child) in T.edges else parent
        weights[child] = T.w(old_head)
        edges.append((parent, child))
    return WeightedOrientedGraph.build(T.vertices, edges, weights)
