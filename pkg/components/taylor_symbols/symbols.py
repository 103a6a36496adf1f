"""
Taylor symbols: subsets of G(I) encoded as int bitmasks

Bit g of a symbol is set when generator g belongs to it. The empty mask is
the rank-0 cell (the module R); singletons are the generators.

TaylorComplex is the per-ideal cache every order-dependent computation
shares: symbol lcms (as interned ids plus exponent tuples), and the
order-independent bridge and gap lists of each symbol.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

import numpy as np

from components.ideal_core import Monomial, MonomialIdeal
from lib.config import get
from lib.errors import InputError, require_capacity
from lib.logging_config import kvlog

logger = logging.getLogger(__name__)

MAX_GENERATORS = 63


# =============================================================================
# Bitmask helpers
# =============================================================================

def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> list[int]:
    """Generator indices of a symbol, ascending"""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def symbol(indices) -> int:
    mask = 0
    for g in indices:
        mask |= 1 << g
    return mask


def format_symbol(mask: int) -> str:
    return '{' + ','.join(str(g) for g in bits(mask)) + '}'


def parse_symbol(text: str, n: int) -> int:
    """
    Parse comma-separated generator indices ("0,1,3"); "" or "{}" is the empty symbol

    Raises:
        InputError: non-integer entries, index out of range, repeated index
    """
    body = text.strip().strip('{}[]').replace(' ', '')
    if not body:
        return 0
    mask = 0
    for part in body.split(','):
        try:
            g = int(part)
        except ValueError:
            raise InputError(f"Symbol entries must be generator indices, got {part!r}") from None
        if not 0 <= g < n:
            raise InputError(f"Generator index {g} out of range 0..{n - 1}")
        if mask >> g & 1:
            raise InputError(f"Generator index {g} repeated in symbol {text!r}")
        mask |= 1 << g
    return mask


def symbol_to_json(mask: int) -> list[int]:
    return bits(mask)


def symbol_from_json(indices) -> int:
    return symbol(indices)


def masks_of_cardinality(n: int, k: int) -> Iterator[int]:
    """All k-subsets of n bits in ascending mask order (Gosper's hack)"""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


# =============================================================================
# Operations on (symbol, ideal)
# =============================================================================

def symbol_lcm(sigma: int, I: MonomialIdeal) -> Monomial:
    """lcm of the selected generators; the empty symbol gives 1"""
    exps = [0] * I.ctx.var_count
    for g in bits(sigma):
        for i, e in enumerate(I.gens[g].exponents):
            if e > exps[i]:
                exps[i] = e
    return Monomial(tuple(exps), I.ctx)


def enumerate_symbols(I_or_n, k: int | None = None) -> Iterator[int]:
    """
    Stream symbols in ascending mask order

    With k absent: all 2^n - 1 nonempty symbols. With k: all C(n, k) symbols
    of cardinality k (k = 0 gives the empty symbol).

    Raises:
        CapacityError: n above the bitmask capacity
        InputError: k out of range
    """
    n = I_or_n if isinstance(I_or_n, int) else I_or_n.n
    require_capacity('generators', n, min(MAX_GENERATORS, get('capacity.max_generators', MAX_GENERATORS)))
    if k is None:
        yield from range(1, 1 << n)
        return
    if k < 0:
        raise InputError(f"Cardinality must be nonnegative, got {k}")
    yield from masks_of_cardinality(n, k)


def incidence(sigma: int, sigma_prime: int) -> int:
    """
    Taylor incidence [σ : σ′]

    Zero unless σ′ = σ∖{g}; then (-1)^k with k the number of elements of σ
    with index below g.
    """
    removed = sigma ^ sigma_prime
    if sigma_prime & ~sigma or removed == 0 or removed & (removed - 1):
        return 0
    k = popcount(sigma & (removed - 1))
    return -1 if k & 1 else 1


@dataclass(frozen=True)
class BaseDigraph:
    """
    Facet digraph of the Taylor simplex: σ → σ∖{g} for every g ∈ σ

    Edges are generated on demand; the full list has n·2^(n-1) entries.
    """

    n: int

    def down_edges(self, sigma: int) -> list[tuple[int, int]]:
        return [(sigma, sigma ^ (1 << g)) for g in bits(sigma)]

    def edges(self) -> Iterator[tuple[int, int]]:
        for sigma in range(1, 1 << self.n):
            yield from self.down_edges(sigma)

    @property
    def edge_count(self) -> int:
        return self.n * (1 << (self.n - 1)) if self.n else 0

    @property
    def vertex_count(self) -> int:
        return 1 << self.n

    def to_json(self):
        return {
            'n': self.n,
            'edges': [{'source': bits(s), 'target': bits(t)} for s, t in self.edges()],
        }


def base_digraph(I: MonomialIdeal) -> BaseDigraph:
    require_capacity('base digraph generators', I.n, get('capacity.full_enumeration', 22))
    return BaseDigraph(I.n)


# =============================================================================
# TaylorComplex cache
# =============================================================================

class TaylorComplex:
    """
    Per-ideal cache of symbol lcms, bridges and gaps

    Up to capacity.dense_lcm_table generators every symbol lcm is computed
    once with a vectorized sweep (lcm(σ) = max(lcm(σ minus top bit), top
    generator)) and interned to an integer id. Above that, lcms are computed
    on demand and interned as they appear.

    lcm_id(a) == lcm_id(b) iff lcm(a) == lcm(b).
    """

    def __init__(self, ideal: MonomialIdeal, dense_limit: int | None = None):
        n = ideal.n
        require_capacity(
            'generators', n, min(MAX_GENERATORS, get('capacity.max_generators', MAX_GENERATORS))
        )
        self.ideal = ideal
        self.n = n
        self.full = (1 << n) - 1
        self.var_count = ideal.ctx.var_count
        self._gens = [g.exponents for g in ideal.gens]
        self._bridges: dict[int, tuple[int, ...]] = {}
        self._gaps: dict[int, tuple[int, ...]] = {}

        if dense_limit is None:
            dense_limit = get('capacity.dense_lcm_table', 22)
        self.dense = n <= dense_limit

        start = time.time()
        if self.dense:
            self._build_dense()
        else:
            self._ids: dict[int, int] = {}
            self._values: list[tuple[int, ...]] = []
            self._intern: dict[tuple[int, ...], int] = {}
            self.lcm_id(0)
        kvlog(logger, logging.DEBUG, op='taylor_complex', n=n, dense=self.dense,
              duration_ms=int((time.time() - start) * 1000))

    def _build_dense(self):
        table = np.zeros((1 << self.n, self.var_count), dtype=np.int64)
        gens = np.array(self._gens, dtype=np.int64).reshape(self.n, self.var_count)
        for b in range(self.n):
            lo = 1 << b
            np.maximum(table[:lo], gens[b], out=table[lo:2 * lo])
        values, inverse = np.unique(table, axis=0, return_inverse=True)
        self._dense_ids = np.asarray(inverse).reshape(-1).tolist()
        self._values = [tuple(int(e) for e in row) for row in values]

    def lcm_id(self, sigma: int) -> int:
        if self.dense:
            return self._dense_ids[sigma]
        found = self._ids.get(sigma)
        if found is not None:
            return found
        exps = [0] * self.var_count
        for g in bits(sigma):
            for i, e in enumerate(self._gens[g]):
                if e > exps[i]:
                    exps[i] = e
        key = tuple(exps)
        ident = self._intern.get(key)
        if ident is None:
            ident = len(self._values)
            self._values.append(key)
            self._intern[key] = ident
        self._ids[sigma] = ident
        return ident

    def lcm_exps(self, sigma: int) -> tuple[int, ...]:
        return self._values[self.lcm_id(sigma)]

    def lcm(self, sigma: int) -> Monomial:
        return Monomial(self.lcm_exps(sigma), self.ideal.ctx)

    def value_of(self, ident: int) -> tuple[int, ...]:
        return self._values[ident]

    def lcm_lattice(self) -> list[tuple[int, ...]]:
        """Distinct symbol lcms (the lcm lattice, 1 included)"""
        if self.dense:
            return list(self._values)
        require_capacity('lattice enumeration generators', self.n, get('capacity.full_enumeration', 22))
        for sigma in range(1 << self.n):
            self.lcm_id(sigma)
        return list(self._values)

    def same_lcm(self, a: int, b: int) -> bool:
        return self.lcm_id(a) == self.lcm_id(b)

    def is_bridge(self, g: int, sigma: int) -> bool:
        bit = 1 << g
        return bool(sigma & bit) and self.lcm_id(sigma ^ bit) == self.lcm_id(sigma)

    def is_gap(self, g: int, sigma: int) -> bool:
        bit = 1 << g
        return not sigma & bit and self.lcm_id(sigma | bit) == self.lcm_id(sigma)

    def bridges(self, sigma: int) -> tuple[int, ...]:
        """All bridges of σ, ascending index (independent of any order)"""
        found = self._bridges.get(sigma)
        if found is None:
            if popcount(sigma) < 3:
                found = ()
            else:
                own = self.lcm_id(sigma)
                found = tuple(g for g in bits(sigma) if self.lcm_id(sigma ^ (1 << g)) == own)
            self._bridges[sigma] = found
        return found

    def gaps(self, sigma: int) -> tuple[int, ...]:
        """All gaps of σ, ascending index"""
        found = self._gaps.get(sigma)
        if found is None:
            if sigma == 0:
                found = ()
            else:
                own = self.lcm_id(sigma)
                found = tuple(
                    g for g in range(self.n)
                    if not sigma >> g & 1 and self.lcm_id(sigma | (1 << g)) == own
                )
            self._gaps[sigma] = found
        return found

    def symbols(self, k: int | None = None) -> Iterator[int]:
        return enumerate_symbols(self.n, k)

    def count(self, k: int) -> int:
        return comb(self.n, k)


@lru_cache(maxsize=16)
def _cached_complex(ideal: MonomialIdeal) -> TaylorComplex:
    return TaylorComplex(ideal)


def complex_for(ideal_or_complex) -> TaylorComplex:
    """TaylorComplex for an ideal, reusing a recent one; complexes pass through"""
    if isinstance(ideal_or_complex, TaylorComplex):
        return ideal_or_complex
    return _cached_complex(ideal_or_complex)
