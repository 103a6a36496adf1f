"""
Shared ideals and seeded generators for the test suite
"""

import os
import random
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from components.graph_ideals import WeightedOrientedGraph
from components.ideal_core import GenOrder, RingContext, ideal_from_exponents, minimize_generators, parse_monomial

SEED = 7


def make_ideal(var_names, *monomials):
    ctx = RingContext.from_names(var_names)
    return minimize_generators([parse_monomial(m, ctx) for m in monomials])


# =============================================================================
# Random inputs
# =============================================================================

def random_ideal(rng, max_gens=6, max_vars=5, max_exp=3, var_count=None):
    """Minimized ideal from up to max_gens random nonzero exponent rows"""
    nvars = var_count or rng.randint(1, max_vars)
    rows = []
    for _ in range(rng.randint(1, max_gens)):
        row = [rng.randint(0, max_exp) for _ in range(nvars)]
        if not any(row):
            row[rng.randrange(nvars)] = 1
        rows.append(row)
    return ideal_from_exponents([f"x{i + 1}" for i in range(nvars)], rows)


def random_order(rng, n):
    return GenOrder(tuple(rng.sample(range(n), n)))


def _weights(rng, names, max_weight):
    return {v: rng.randint(1, max_weight) for v in names}


def random_forest(rng, max_vertices=9, max_weight=3):
    """Naturally oriented forest of one or two trees, each with at least two vertices"""
    n = rng.randint(3, max_vertices)
    names = [f"v{i}" for i in range(n)]
    split = rng.randint(2, n - 2) if n >= 5 and rng.random() < 0.4 else n
    edges = []
    for lo, hi in ((0, split), (split, n)):
        for i in range(lo + 1, hi):
            edges.append((names[rng.randint(lo, i - 1)], names[i]))
    return WeightedOrientedGraph.build(names, edges, _weights(rng, names, max_weight))


def random_oriented_cycle(rng, min_vertices=3, max_vertices=8, max_weight=3):
    """Cycle y1 - y2 - ... - yn - y1 with every edge pointing a random way"""
    n = rng.randint(min_vertices, max_vertices)
    names = [f"y{i + 1}" for i in range(n)]
    edges = []
    for i in range(n):
        u, v = names[i], names[(i + 1) % n]
        edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return WeightedOrientedGraph.build(names, edges, _weights(rng, names, max_weight))


def random_oriented_path(rng, max_vertices=9, max_weight=3):
    n = rng.randint(3, max_vertices)
    names = [f"x{i + 1}" for i in range(n)]
    edges = []
    for i in range(n - 1):
        u, v = names[i], names[i + 1]
        edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return WeightedOrientedGraph.build(names, edges, _weights(rng, names, max_weight))


# =============================================================================
# Fixtures
# =============================================================================

@pytest.fixture
def four_cycle():
    """(xw, xy, yz, zw): generators listed around the cycle"""
    return make_ideal('x y z w', 'x*w', 'x*y', 'y*z', 'z*w')


@pytest.fixture
def dependent_order():
    """Minimal under the identity order, not under 2,3,0,1"""
    return make_ideal('x y z', 'x^2*y^2', 'y^2*z^2', 'x*z^2', 'x^2*z')


@pytest.fixture
def six_gens():
    return make_ideal(
        'x1 x2 x3 x4 x5 x6 x7 x8',
        'x1*x2*x3*x4', 'x2*x3*x5*x6', 'x1*x2*x5', 'x1*x2*x7', 'x2*x3*x8', 'x7*x8',
    )


@pytest.fixture
def char_dependent():
    return make_ideal(
        'x1 x2 x3 x4 x5 x6 x7 x8 x9 x10',
        'x1*x2*x8*x9*x10', 'x2*x3*x4*x5*x10', 'x5*x6*x7*x8*x10',
        'x1*x4*x5*x6*x9', 'x1*x2*x3*x6*x7', 'x3*x4*x7*x8*x9',
    )


@pytest.fixture
def koszul():
    return make_ideal('x y', 'x', 'y')


@pytest.fixture
def rng():
    return random.Random(SEED)
