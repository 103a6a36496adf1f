"""
Weighted oriented cycles

Cycle positions follow the walk that starts along edge 0: x_1 is its tail,
x_2 its head, and m_i is the generator on the edge joining x_i and x_{i+1}
(indices mod n). A blockend is an m_i with m_i ∤ lcm(m_{i-1}, m_{i+1}); a
cycle without blockends is classic.

Canonical form for the recursions is sinking, then ironing, then rotating
so that m_n is a blockend.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx

from components.ideal_core import GenOrder
from lib.errors import GraphError
from lib.logging_config import kvlog

from .forests import betti_add, betti_product, forest_betti_recursion_total, iron_forest, koszul_shift
from .graphs import WeightedOrientedGraph, edge_ideal, naturally_oriented_cycle, path_graph, sinking

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleOrder:
    """x_1..x_n and the generator indices m_1..m_n around the cycle"""

    vertices: tuple[str, ...]
    gens: tuple[int, ...]

    @property
    def n(self):
        return len(self.gens)

    def rotated(self, start: int) -> 'CycleOrder':
        """Make position start (0-based) the new m_1"""
        return CycleOrder(self.vertices[start:] + self.vertices[:start], self.gens[start:] + self.gens[:start])

    def prev(self, p: int) -> int:
        return self.gens[(p - 1) % self.n]

    def next(self, p: int) -> int:
        return self.gens[(p + 1) % self.n]


def is_cycle(D: WeightedOrientedGraph) -> bool:
    G = D.undirected()
    return (
        len(D.vertices) >= 3
        and len(D.edges) == len(D.vertices)
        and nx.is_connected(G)
        and all(d == 2 for _, d in G.degree())
    )


def is_path(D: WeightedOrientedGraph) -> bool:
    G = D.undirected()
    return len(D.edges) >= 1 and len(D.edges) == len(D.vertices) - 1 and nx.is_tree(G) and max(
        d for _, d in G.degree()) <= 2


def cycle_order(C: WeightedOrientedGraph) -> CycleOrder:
    if not is_cycle(C):
        raise GraphError("Graph is not a cycle")
    G = C.undirected()
    first, second = C.edges[0]
    vertices = [first, second]
    gens = [0]
    while len(vertices) < len(C.vertices):
        prev, cur = vertices[-2], vertices[-1]
        nxt = next(u for u in G.neighbors(cur) if u != prev)
        gens.append(G.edges[cur, nxt]['gen'])
        vertices.append(nxt)
    gens.append(G.edges[vertices[-1], vertices[0]]['gen'])
    return CycleOrder(tuple(vertices), tuple(gens))


def is_naturally_oriented(C: WeightedOrientedGraph) -> bool:
    """All edges point the same way around the cycle"""
    if not is_cycle(C):
        return False
    order = cycle_order(C)
    n = order.n
    return all(C.edges[g] == (order.vertices[i], order.vertices[(i + 1) % n]) for i, g in enumerate(order.gens))


def blockends_cycle(C: WeightedOrientedGraph) -> list[int]:
    """Generator indices m_i with m_i ∤ lcm(m_{i-1}, m_{i+1})"""
    order = cycle_order(C)
    gens = edge_ideal(C).ideal.gens
    out = []
    for p, g in enumerate(order.gens):
        if not gens[g].divides(gens[order.prev(p)].lcm(gens[order.next(p)])):
            out.append(g)
    return sorted(out)


def is_classic(C: WeightedOrientedGraph) -> bool:
    return not blockends_cycle(C)


def _blockend_positions(C, order: CycleOrder) -> list[int]:
    ends = set(blockends_cycle(C))
    return [p for p, g in enumerate(order.gens) if g in ends]


def rotate_to_blockend(C: WeightedOrientedGraph) -> CycleOrder:
    """
    Cycle order rotated so m_n is the first blockend met along the walk

    Raises:
        GraphError: C is classic
    """
    order = cycle_order(C)
    positions = _blockend_positions(C, order)
    if not positions:
        raise GraphError("Cycle is classic; it has no blockend")
    return order.rotated((positions[0] + 1) % order.n)


def blocks_cycle(C: WeightedOrientedGraph) -> list[tuple[int, ...]]:
    """
    Generator runs from one blockend to the next, both included

    With a single blockend the one block runs all the way round and starts
    and ends at it. Classic cycles have no blocks.
    """
    order = cycle_order(C)
    positions = _blockend_positions(C, order)
    if not positions:
        return []
    n = order.n
    blocks = []
    for k, start in enumerate(positions):
        end = positions[(k + 1) % len(positions)]
        length = (end - start) % n or n
        blocks.append(tuple(order.gens[(start + i) % n] for i in range(length + 1)))
    return blocks


def descending_cycle_order(C: WeightedOrientedGraph) -> GenOrder:
    """m_1 > m_2 > ... > m_n with m_n a blockend"""
    return GenOrder(rotate_to_blockend(C).gens)


def kflip_order(C: WeightedOrientedGraph, k: int) -> GenOrder:
    """
    Descending order with the second and third generators of block B_k swapped

    Blockend positions after rotation are b_1 < ... < b_t = n, with b_0 = 0;
    B_k runs from m_{b_{k-1}} to m_{b_k}.

    Raises:
        GraphError: C classic or not naturally oriented, k out of range, or |B_k| < 3
    """
    if not is_naturally_oriented(C):
        raise GraphError("k-flip orders need a naturally oriented cycle")
    rotated = rotate_to_blockend(C)
    ends = set(blockends_cycle(C))
    b = [0] + [p + 1 for p, g in enumerate(rotated.gens) if g in ends]
    if not 1 <= k < len(b):
        raise GraphError(f"k must be between 1 and {len(b) - 1}, got {k}")
    size = b[k] - b[k - 1] + 1
    if size < 3:
        raise GraphError(f"Block B_{k} has {size} generators; a k-flip needs at least 3")
    perm = list(rotated.gens)
    i = b[k - 1]
    perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return GenOrder(tuple(perm))


# =============================================================================
# Block-based bridges and gaps
# =============================================================================

class CycleBlocks:
    """Blockends and cycle neighbors for evaluating the block predicates"""

    def __init__(self, C: WeightedOrientedGraph):
        self.order = cycle_order(C)
        self.ends = set(blockends_cycle(C))
        self.position = {g: p for p, g in enumerate(self.order.gens)}

    def neighbors(self, g: int) -> tuple[int, int]:
        p = self.position[g]
        return self.order.prev(p), self.order.next(p)

    def spans(self, g: int, sigma: int) -> bool:
        a, b = self.neighbors(g)
        return g not in self.ends and bool(sigma >> a & 1) and bool(sigma >> b & 1)


def cycle_is_bridge(g: int, sigma: int, blocks: CycleBlocks) -> bool:
    return bool(sigma >> g & 1) and blocks.spans(g, sigma)


def cycle_is_gap(g: int, sigma: int, blocks: CycleBlocks) -> bool:
    return not sigma >> g & 1 and blocks.spans(g, sigma)


def cycle_is_true_gap(g: int, sigma: int, blocks: CycleBlocks, ord: GenOrder) -> bool:
    if not cycle_is_gap(g, sigma, blocks):
        return False
    grown = sigma | (1 << g)
    for f in set(blocks.neighbors(g)):
        if not sigma >> f & 1 or ord.pos[f] <= ord.pos[g]:
            continue
        if cycle_is_bridge(f, grown, blocks) and not cycle_is_bridge(f, sigma, blocks):
            return False
    return True


# =============================================================================
# Ironing and the recursions
# =============================================================================

def _path_start(P: WeightedOrientedGraph) -> str:
    G = P.undirected()
    ends = [v for v in P.vertices if G.degree(v) == 1]
    tails = [v for v in ends if any(a == v for a, _ in P.edges)]
    return (tails or ends)[0]


def ironing(D: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """
    Orient a sunk cycle or path forward; each new head takes the old head's weight

    Cycles keep their edge indices, so generator i of the result sits on the
    same edge as generator i of the input.

    Raises:
        GraphError: D is not sunk, or not a cycle or path
    """
    heavy_sinks = [v for v in D.sinks() if D.w(v) != 1]
    if heavy_sinks:
        raise GraphError(f"Ironing needs a sunk graph; sinks with weight > 1: {', '.join(heavy_sinks)}")
    if is_path(D):
        return iron_forest(D, _path_start(D))
    if not is_cycle(D):
        raise GraphError("Ironing needs a cycle or a path")

    order = cycle_order(D)
    n = order.n
    edges = list(D.edges)
    weights = {}
    for i, g in enumerate(order.gens):
        tail, head = order.vertices[i], order.vertices[(i + 1) % n]
        weights[head] = D.w(D.edges[g][1])
        edges[g] = (tail, head)
    return WeightedOrientedGraph.build(D.vertices, edges, weights)


def canonical_cycle(C: WeightedOrientedGraph) -> tuple[WeightedOrientedGraph, CycleOrder]:
    """Sink, iron and rotate so m_n is a blockend"""
    ironed = ironing(sinking(C))
    return ironed, rotate_to_blockend(ironed)


def cycle_betti_recursion_total(C: WeightedOrientedGraph) -> tuple[tuple[int, ...], int]:
    """
    Total Betti numbers and projective dimension of a non-classic cycle

    After canonicalizing, P = x_1 → ... → x_n and the cases on
    (w(x_n), w(x_2)) are:
      (1, 1):    β(P) + t(1+t)^2 β(C∖{x_{n-1}, x_n, x_1, x_2})  (t(1+t) when n = 3)
      (1, ≥2):   β(P) + t(1+t) β(C∖{x_{n-1}, x_n})
      (≥2, 1):   β(P) + t(1+t) β(C∖{x_1, x_2})
      (≥2, ≥2):  (1+t) β(P)

    Returns:
        (totals, pd)

    Raises:
        GraphError: the cycle is classic after sinking and ironing
    """
    if not is_cycle(C):
        raise GraphError("Graph is not a cycle")
    ironed = ironing(sinking(C))
    if is_classic(ironed):
        raise GraphError("Cycle is classic; the recursion needs a blockend")
    order = rotate_to_blockend(ironed)
    x = order.vertices
    n = order.n
    P = WeightedOrientedGraph.build(
        x, [(x[i], x[i + 1]) for i in range(n - 1)], {v: ironed.w(v) for v in x[1:]},
    )
    totals_p, pd_p = forest_betti_recursion_total(P)
    w2, wn = ironed.w(x[1]), ironed.w(x[n - 1])

    if wn >= 2 and w2 >= 2:
        case = 4
        totals, pd = betti_product(totals_p, (1, 1)), pd_p + 1
    else:
        if wn == 1 and w2 == 1:
            case, k = 1, (1 if n == 3 else 2)
            removed = {x[n - 2], x[n - 1], x[0], x[1]}
        elif wn == 1:
            case, k = 2, 1
            removed = {x[n - 2], x[n - 1]}
        else:
            case, k = 3, 1
            removed = {x[0], x[1]}
        Q = ironed.remove_vertices(removed)
        totals_q, pd_q = forest_betti_recursion_total(Q) if Q.edges else ((1,), 0)
        totals = betti_add(totals_p, koszul_shift(totals_q, k))
        pd = max(pd_p, 1 + k + pd_q)

    kvlog(logger, logging.DEBUG, op='cycle_recursion', n=n, case=case, totals=totals, pd=pd)
    return totals, pd


# =============================================================================
# Path/cycle partners
# =============================================================================

def path_to_cycle(P: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """Cycle of length n with w(y_1) = w(y_2) = 2 and w(y_i) = w_P(x_i) for i ≥ 3"""
    if not is_path(P):
        raise GraphError("Graph is not a path")
    ironed = ironing(sinking(P))
    start = _path_start(ironed)
    walk = [start]
    G = ironed.undirected()
    while len(walk) < len(ironed.vertices):
        walk.append(next(u for u in G.neighbors(walk[-1]) if u not in walk))
    n = len(walk) - 1
    if n < 3:
        raise GraphError("Path partner cycles need a path of length at least 3")
    weights = [2, 2] + [ironed.w(walk[i]) for i in range(2, n)]
    return naturally_oriented_cycle(weights)


def cycle_to_path(C: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """
    Path with the same total Betti numbers as C

    With two consecutive blockends m_n, m_1 the path is x_1 → ... → x_{n+1}
    with w(x_i) = w(y_i) for i ≤ n and w(x_{n+1}) = 1. Otherwise only small
    cycles have a listed partner.

    Raises:
        GraphError: n ≥ 5 and no two blockends are adjacent
    """
    ironed = ironing(sinking(C))
    order = cycle_order(ironed)
    n = order.n
    ends = set(blockends_cycle(ironed))
    for p in range(n):
        if order.gens[p] in ends and order.next(p) in ends:
            rotated = order.rotated((p + 1) % n)
            weights = [ironed.w(v) for v in rotated.vertices] + [1]
            return path_graph(weights)

    flags = [g in ends for g in order.gens]
    if n == 3:
        return path_graph([1, 1, 1, 1])
    if n == 4:
        if flags.count(True) <= 1:
            return path_graph([1] * 5)
        return path_graph([1, 1, 2, 1, 1])
    raise GraphError("Cycle has no two adjacent blockends and more than four vertices; no path partner is listed")


def path_cycle_transfer(D: WeightedOrientedGraph) -> WeightedOrientedGraph:
    if is_cycle(D):
        return cycle_to_path(D)
    if is_path(D):
        return path_to_cycle(D)
    raise GraphError("Graph is neither a path nor a cycle")


def no_path_partner_cycle(n: int) -> WeightedOrientedGraph:
    """(y1y2, y2y3, ..., y_{n-1}y_n, y_n·y1²)"""
    return naturally_oriented_cycle([2] + [1] * (n - 1))
