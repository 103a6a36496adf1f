"""
E-K splittings of classic cycles

For I(C_n) = J + K with J = (x2x3, ..., x_{n-1}x_n) and K = (x_n x1, x1x2),
a splitting function sends each minimal generator w of J∩K to a pair
(φ(w), ψ(w)) ∈ G(J)×G(K) with w = lcm(φ(w), ψ(w)), such that lcm(φ(W)) and
lcm(ψ(W)) strictly divide lcm(W) for every nonempty W ⊆ G(J∩K).

J∩K splits again as J′ + K′ with J′ = x1x_n·(x_{n-1}, x_i x_{i+1} : 3 ≤ i ≤ n-3)
and K′ = x1x2·(x3, x_j x_{j+1} : 4 ≤ j ≤ n-2). Both levels carry
explicit splitting functions; at the inner level every generator of J′∩K′
is divisible by x2x_n while its φ′-image misses x2 and its ψ′-image misses x_n.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from components.homology_oracle import FieldSpec, tor_betti
from components.ideal_core import Monomial, MonomialIdeal, embed, intersect
from lib.config import get
from lib.errors import EngineError, GraphError, InputError, require_capacity
from lib.logging_config import kvlog

from .graphs import classic_cycle, edge_ideal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplittingLevel:
    """I = J + K with the splitting function w ↦ (φ(w), ψ(w)) over G(J∩K)"""

    ideal: MonomialIdeal
    J: MonomialIdeal
    K: MonomialIdeal
    intersection: MonomialIdeal
    split: dict

    def to_json(self):
        return {
            'I': [str(g) for g in self.ideal.gens],
            'J': [str(g) for g in self.J.gens],
            'K': [str(g) for g in self.K.gens],
            'intersection': [str(g) for g in self.intersection.gens],
            'split': [
                {'w': str(w), 'phi': str(a), 'psi': str(b)} for w, (a, b) in self.split.items()
            ],
        }


@dataclass(frozen=True)
class EKSplitting:
    n: int
    outer: SplittingLevel
    inner: SplittingLevel

    def to_json(self):
        return {'n': self.n, 'outer': self.outer.to_json(), 'inner': self.inner.to_json()}


def _mono(ctx, *names) -> Monomial:
    m = ctx.one()
    for name in names:
        m = m * ctx.variable(name)
    return m


def ek_split_cycle(n: int) -> EKSplitting:
    """
    The two nested splittings of I(C_n)

    Raises:
        GraphError: n < 8
    """
    if n < 8:
        raise GraphError(f"Cycle splittings are built for n ≥ 8, got {n}")
    I = edge_ideal(classic_cycle(n)).ideal
    ctx = I.ctx

    def x(i):
        return f"x{i}"

    J = MonomialIdeal(ctx, tuple(_mono(ctx, x(i), x(i + 1)) for i in range(2, n)))
    K = MonomialIdeal(ctx, (_mono(ctx, x(n), x(1)), _mono(ctx, x(1), x(2))))
    JK = intersect(J, K)

    split = {
        _mono(ctx, x(1), x(n - 1), x(n)): (_mono(ctx, x(n - 1), x(n)), _mono(ctx, x(1), x(n))),
        _mono(ctx, x(1), x(2), x(3)): (_mono(ctx, x(2), x(3)), _mono(ctx, x(1), x(2))),
    }
    for i in range(3, n - 2):
        split[_mono(ctx, x(1), x(i), x(i + 1), x(n))] = (_mono(ctx, x(i), x(i + 1)), _mono(ctx, x(1), x(n)))
    for j in range(4, n - 1):
        split[_mono(ctx, x(1), x(2), x(j), x(j + 1))] = (_mono(ctx, x(j), x(j + 1)), _mono(ctx, x(1), x(2)))
    if set(split) != set(JK.gens):
        raise EngineError(f"Unexpected generators of J∩K for n={n}")
    outer = SplittingLevel(I, J, K, JK, {w: split[w] for w in JK.gens})

    c1n = _mono(ctx, x(1), x(n))
    c12 = _mono(ctx, x(1), x(2))
    J2 = MonomialIdeal(ctx, (c1n * ctx.variable(x(n - 1)),) + tuple(
        c1n * _mono(ctx, x(i), x(i + 1)) for i in range(3, n - 2)))
    K2 = MonomialIdeal(ctx, (c12 * ctx.variable(x(3)),) + tuple(
        c12 * _mono(ctx, x(j), x(j + 1)) for j in range(4, n - 1)))
    JK2 = intersect(J2, K2)

    def phi(*names):
        return c1n * _mono(ctx, *names)

    def psi(*names):
        return c12 * _mono(ctx, *names)

    # G(J′∩K′) = x1x2x_n·(x3x_{n-1}, x_k x_{k+1} : 3 ≤ k ≤ n-2)
    base = _mono(ctx, x(1), x(2), x(n))
    inner_split = {
        base * _mono(ctx, x(3), x(n - 1)): (phi(x(n - 1)), psi(x(3))),
        base * _mono(ctx, x(3), x(4)): (phi(x(3), x(4)), psi(x(3))),
        base * _mono(ctx, x(n - 2), x(n - 1)): (phi(x(n - 1)), psi(x(n - 2), x(n - 1))),
    }
    for k in range(4, n - 2):
        inner_split[base * _mono(ctx, x(k), x(k + 1))] = (phi(x(k), x(k + 1)), psi(x(k), x(k + 1)))
    if set(inner_split) != set(JK2.gens):
        raise EngineError(f"Unexpected generators of J′∩K′ for n={n}")
    inner = SplittingLevel(JK, J2, K2, JK2, {w: inner_split[w] for w in JK2.gens})

    kvlog(logger, logging.DEBUG, op='ek_split', n=n, outer=len(JK.gens), inner=len(JK2.gens))
    return EKSplitting(n, outer, inner)


def _subset_lcms(rows: np.ndarray) -> np.ndarray:
    """Row mask holds the lcm of the rows selected by mask"""
    m, width = rows.shape
    table = np.zeros((1 << m, width), dtype=np.int64)
    for b in range(m):
        lo = 1 << b
        np.maximum(table[:lo], rows[b], out=table[lo:2 * lo])
    return table


def validate_ek(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal, split: dict) -> bool:
    """
    Check that split is a splitting function for I = J + K

    Raises:
        InputError: G(I) is not the disjoint union of G(J) and G(K)
        CapacityError: |G(J∩K)| above capacity.ek_subsets
    """
    gi, gj, gk = set(I.gens), set(J.gens), set(K.gens)
    if gj & gk or gj | gk != gi:
        raise InputError("G(I) must be the disjoint union of G(J) and G(K)")
    JK = intersect(J, K)
    require_capacity('splitting subsets |G(J∩K)|', JK.n, get('capacity.ek_subsets', 20))
    if set(split) != set(JK.gens):
        kvlog(logger, logging.DEBUG, op='validate_ek', failure='domain')
        return False
    for w in JK.gens:
        a, b = split[w]
        if a not in gj or b not in gk or a.lcm(b) != w:
            kvlog(logger, logging.DEBUG, op='validate_ek', failure='pair', w=str(w))
            return False

    ws = np.array([w.exponents for w in JK.gens], dtype=np.int64)
    phi = np.array([split[w][0].exponents for w in JK.gens], dtype=np.int64)
    psi = np.array([split[w][1].exponents for w in JK.gens], dtype=np.int64)
    full = _subset_lcms(ws)[1:]
    for images, label in ((phi, 'phi'), (psi, 'psi')):
        part = _subset_lcms(images)[1:]
        strict = (part <= full).all(axis=1) & (part != full).any(axis=1)
        if not strict.all():
            mask = int(np.argmin(strict)) + 1
            kvlog(logger, logging.DEBUG, op='validate_ek', failure=label, subset=mask)
            return False
    return True


def validate_splitting(level: SplittingLevel) -> bool:
    return validate_ek(level.ideal, level.J, level.K, level.split)


def betti_splitting_holds(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal,
                          field: FieldSpec | None = None) -> bool:
    """
    β_{i,v}(R/I) = β_{i,v}(R/J) + β_{i,v}(R/K) + β_{i-1,v}(R/(J∩K)) for i ≥ 2,
    and β_{1,v}(R/I) = β_{1,v}(R/J) + β_{1,v}(R/K)
    """
    ctx = I.ctx
    J, K = embed(J, ctx), embed(K, ctx)
    tables = [tor_betti(X, field) for X in (I, J, K, embed(intersect(J, K), ctx))]
    bI, bJ, bK, bJK = tables
    keys = set(bI.entries) | set(bJ.entries) | set(bK.entries)
    keys |= {(i + 1, v) for i, v in bJK.entries}
    for i, v in keys:
        if i == 0:
            continue
        expected = bJ.get(i, v) + bK.get(i, v) + (bJK.get(i - 1, v) if i >= 2 else 0)
        if bI.get(i, v) != expected:
            kvlog(logger, logging.DEBUG, op='betti_splitting', i=i, mdeg=v, got=bI.get(i, v), expected=expected)
            return False
    return True
