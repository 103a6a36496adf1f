"""
Weighted oriented graphs and their edge ideals

A WeightedOrientedGraph is D = (V, E, w) with a simple underlying graph and
positive vertex weights. Its edge ideal has one generator per edge (x, y),
namely x·y^{w(y)}; an edge may instead carry an explicit exponent pair
(a, b) giving x^a·y^b.

Text format:
    vertex a b c
    edge a -> b
    edge b c            (same as b -> c)
    weight b 3

JSON format:
    {"vertices": ["a", "b"], "edges": [["a", "b"]], "weights": {"b": 3}}
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import networkx as nx

from components.ideal_core import GenOrder, Monomial, MonomialIdeal, RingContext
from lib.errors import GraphError, IdealError, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """D = (V, E, w); weights default to 1"""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    weights: tuple[tuple[str, int], ...] = ()
    exponents: tuple[tuple[tuple[str, str], tuple[int, int]], ...] = ()
    _w: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple((str(u), str(v)) for u, v in self.edges)
        weights = dict(self.weights) if not isinstance(self.weights, dict) else dict(self.weights)
        object.__setattr__(self, 'vertices', vertices)
        object.__setattr__(self, 'edges', edges)

        if len(set(vertices)) != len(vertices):
            raise GraphError("Duplicate vertex names")
        known = set(vertices)
        seen = set()
        for u, v in edges:
            if u not in known or v not in known:
                missing = u if u not in known else v
                raise GraphError(f"Edge ({u}, {v}) uses unknown vertex {missing!r}")
            if u == v:
                raise GraphError(f"Loop at vertex {u!r}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"Multiple edges between {u!r} and {v!r}")
            seen.add(key)
        for name, w in weights.items():
            if name not in known:
                raise GraphError(f"Weight given for unknown vertex {name!r}")
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise GraphError(f"Weight of {name!r} must be a positive integer, got {w!r}")
        full = {v: weights.get(v, 1) for v in vertices}
        object.__setattr__(self, 'weights', tuple(sorted(full.items())))
        object.__setattr__(self, '_w', full)

        exps = dict(self.exponents) if not isinstance(self.exponents, dict) else dict(self.exponents)
        edge_set = set(edges)
        for e, (a, b) in exps.items():
            if tuple(e) not in edge_set:
                raise GraphError(f"Exponent pair given for unknown edge {e}")
            if a < 1 or b < 1:
                raise GraphError(f"Exponents of edge {e} must be positive")
        object.__setattr__(self, 'exponents', tuple(sorted((tuple(e), tuple(p)) for e, p in exps.items())))

    @classmethod
    def build(cls, vertices, edges, weights=None, exponents=None):
        return cls(tuple(vertices), tuple(tuple(e) for e in edges),
                   tuple((weights or {}).items()), tuple((exponents or {}).items()))

    def w(self, v) -> int:
        return self._w[v]

    @property
    def weight_map(self) -> dict[str, int]:
        return dict(self._w)

    def index(self, v) -> int:
        return self.vertices.index(v)

    def digraph(self) -> nx.DiGraph:
        G = nx.DiGraph()
        for v in self.vertices:
            G.add_node(v, weight=self._w[v])
        for i, (u, v) in enumerate(self.edges):
            G.add_edge(u, v, gen=i)
        return G

    def undirected(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        for i, (u, v) in enumerate(self.edges):
            G.add_edge(u, v, gen=i)
        return G

    def sinks(self) -> list[str]:
        """Vertices with incoming edges and no outgoing edge"""
        outs = {u for u, _ in self.edges}
        ins = {v for _, v in self.edges}
        return [v for v in self.vertices if v in ins and v not in outs]

    def in_degree(self, v) -> int:
        return sum(1 for _, b in self.edges if b == v)

    def neighbors(self, v) -> list[str]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def edge_between(self, u, v):
        """Generator index of the edge joining u and v (either direction), or None"""
        for i, (a, b) in enumerate(self.edges):
            if (a, b) == (u, v) or (a, b) == (v, u):
                return i
        return None

    def with_weights(self, weights: dict) -> 'WeightedOrientedGraph':
        merged = self.weight_map
        merged.update(weights)
        return WeightedOrientedGraph(self.vertices, self.edges, tuple(merged.items()), self.exponents)

    def with_edges(self, edges, weights=None) -> 'WeightedOrientedGraph':
        return WeightedOrientedGraph(self.vertices, tuple(edges),
                                     tuple((weights if weights is not None else self._w).items()))

    def remove_vertices(self, removed) -> 'WeightedOrientedGraph':
        """Induced subgraph on the remaining vertices"""
        removed = set(removed)
        keep = tuple(v for v in self.vertices if v not in removed)
        edges = tuple((a, b) for a, b in self.edges if a not in removed and b not in removed)
        exps = tuple((e, p) for e, p in self.exponents if e in edges)
        return WeightedOrientedGraph(keep, edges, tuple((v, self._w[v]) for v in keep), exps)

    def generator_exponents(self, i) -> tuple[int, int]:
        e = self.edges[i]
        for key, pair in self.exponents:
            if key == e:
                return pair
        return 1, self._w[e[1]]

    def __str__(self):
        return graph_to_text(self).strip()


@dataclass(frozen=True)
class EdgeIdealMap:
    """I(D) with generator i belonging to edge D.edges[i]"""

    graph: WeightedOrientedGraph
    ideal: MonomialIdeal

    def generator_of(self, u, v) -> int:
        i = self.graph.edge_between(u, v)
        if i is None:
            raise GraphError(f"No edge between {u!r} and {v!r}")
        return i

    def edge_of(self, g):
        return self.graph.edges[g]


def edge_ideal(D: WeightedOrientedGraph) -> EdgeIdealMap:
    """
    One generator x·y^{w(y)} per edge (x, y), variables = vertices

    Raises:
        GraphError: no edges, or the generators are not a minimal system
    """
    if not D.edges:
        raise GraphError("Graph has no edges; its edge ideal is zero")
    ctx = RingContext(D.vertices)
    gens = []
    for i, (u, v) in enumerate(D.edges):
        a, b = D.generator_exponents(i)
        exps = [0] * ctx.var_count
        exps[ctx.index(u)] = a
        exps[ctx.index(v)] = b
        gens.append(Monomial(tuple(exps), ctx))
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            if i != j and gi.divides(gj):
                raise GraphError(
                    f"Edge generators are not minimal: {gi} (edge {D.edges[i]}) divides {gj} (edge {D.edges[j]})"
                )
    try:
        ideal = MonomialIdeal(ctx, tuple(gens))
    except IdealError as e:
        raise GraphError(str(e)) from None
    return EdgeIdealMap(D, ideal)


def sinking(D: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """Reset the weight of every sink to 1"""
    return D.with_weights({v: 1 for v in D.sinks()})


def disjoint_sum_order(I: MonomialIdeal, J: MonomialIdeal, ord_I: GenOrder, ord_J: GenOrder):
    """
    I + J over disjoint variable sets, with every generator of I above every generator of J

    Raises:
        IdealError: the two ideals share a variable
    """
    shared = set(I.ctx.var_names) & set(J.ctx.var_names)
    if shared:
        raise IdealError(f"Ideals share variables: {', '.join(sorted(shared))}")
    ord_I.check_size(I.n)
    ord_J.check_size(J.n)
    ctx = RingContext(I.ctx.var_names + J.ctx.var_names)
    pad_j = (0,) * I.ctx.var_count
    pad_i = (0,) * J.ctx.var_count
    gens = [Monomial(g.exponents + pad_i, ctx) for g in I.gens]
    gens += [Monomial(pad_j + g.exponents, ctx) for g in J.gens]
    order = GenOrder(ord_I.perm + tuple(I.n + p for p in ord_J.perm))
    return MonomialIdeal(ctx, tuple(gens)), order


# =============================================================================
# Constructors
# =============================================================================

def path_graph(weights, names=None) -> WeightedOrientedGraph:
    """
    Naturally oriented path x1 → x2 → ... → x_{m+1}

    weights lists w(x1), ..., w(x_{m+1}) (w(x1) never enters the ideal).
    """
    weights = list(weights)
    if len(weights) < 2:
        raise GraphError("A path needs at least two vertices")
    names = list(names) if names else [f"x{i + 1}" for i in range(len(weights))]
    edges = [(names[i], names[i + 1]) for i in range(len(names) - 1)]
    return WeightedOrientedGraph.build(names, edges, dict(zip(names, weights)))


def naturally_oriented_cycle(weights, names=None) -> WeightedOrientedGraph:
    """Cycle y1 → y2 → ... → yn → y1 with w(y_i) = weights[i-1]"""
    weights = list(weights)
    if len(weights) < 3:
        raise GraphError("A cycle needs at least three vertices")
    names = list(names) if names else [f"y{i + 1}" for i in range(len(weights))]
    n = len(names)
    edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return WeightedOrientedGraph.build(names, edges, dict(zip(names, weights)))


def classic_cycle(n: int) -> WeightedOrientedGraph:
    """Unweighted cycle C_n on x1..xn; generator i is x_{i+1}·x_{i+2} (indices mod n)"""
    return naturally_oriented_cycle([1] * n, [f"x{i + 1}" for i in range(n)])


# =============================================================================
# File formats
# =============================================================================

def parse_graph_text(text: str) -> WeightedOrientedGraph:
    """
    Parse the text graph format

    Raises:
        InputError: unknown keyword or malformed line
    """
    vertices: list[str] = []
    edges = []
    weights = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split('#', 1)[0].split()
        if not parts:
            continue
        keyword, args = parts[0], parts[1:]
        if keyword == 'vertex':
            for v in args:
                if v not in vertices:
                    vertices.append(v)
        elif keyword == 'edge':
            if len(args) == 3 and args[1] == '->':
                u, v = args[0], args[2]
            elif len(args) == 2:
                u, v = args
            else:
                raise InputError(f"line {lineno}: expected 'edge a -> b' or 'edge a b'")
            for x in (u, v):
                if x not in vertices:
                    vertices.append(x)
            edges.append((u, v))
        elif keyword == 'weight':
            if len(args) != 2:
                raise InputError(f"line {lineno}: expected 'weight <vertex> <int>'")
            try:
                weights[args[0]] = int(args[1])
            except ValueError:
                raise InputError(f"line {lineno}: weight must be an integer, got {args[1]!r}") from None
        else:
            raise InputError(f"line {lineno}: unknown keyword {keyword!r}")
    if not vertices:
        raise InputError("Graph file declares no vertices")
    return WeightedOrientedGraph.build(vertices, edges, weights)


def parse_graph_json(data) -> WeightedOrientedGraph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise InputError(f"Invalid JSON: {e}") from None
    if not isinstance(data, dict) or 'vertices' not in data or 'edges' not in data:
        raise InputError("JSON graph needs keys 'vertices' and 'edges'")
    exponents = {}
    for item in data.get('exponents', []):
        exponents[(item['edge'][0], item['edge'][1])] = tuple(item['pair'])
    return WeightedOrientedGraph.build(
        data['vertices'], [tuple(e) for e in data['edges']], data.get('weights', {}), exponents,
    )


def load_graph(path) -> WeightedOrientedGraph:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror}") from None
    if path.suffix == '.json' or text.lstrip().startswith('{'):
        return parse_graph_json(text)
    return parse_graph_text(text)


def graph_to_text(D: WeightedOrientedGraph) -> str:
    lines = ['vertex ' + ' '.join(D.vertices)]
    lines.extend(f"edge {u} -> {v}" for u, v in D.edges)
    lines.extend(f"weight {v} {w}" for v, w in D.weights if w != 1)
    return '\n'.join(lines) + '\n'


def graph_to_json(D: WeightedOrientedGraph) -> dict:
    out = {
        'vertices': list(D.vertices),
        'edges': [list(e) for e in D.edges],
        'weights': {v: w for v, w in D.weights if w != 1},
    }
    if D.exponents:
        out['exponents'] = [{'edge': list(e), 'pair': list(p)} for e, p in D.exponents]
    return out
