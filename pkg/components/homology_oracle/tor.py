"""
Independent homological oracle

tor_betti: graded Betti numbers of R/I via Tor computed on the Taylor
complex. After tensoring with k, only Taylor entries between symbols of
equal lcm survive, so the complex splits into one strand per lcm value v
with basis {σ : lcm(σ) = v}; β_{i,v} is the homology of that strand.

strand_exactness: certifies that a candidate complex (e.g. a Morse
complex) is a resolution by checking, for every v in the lcm lattice, the
strand with basis {critical σ : lcm(σ) | v}.

Homological index: position 0 is R (the empty symbol), position 1 the
generators. β_0(R/I) = 1, β_1 = n.
"""

from __future__ import annotations

import logging
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from components.ideal_core import Monomial, RingContext
from components.taylor_symbols import bits, complex_for, incidence, popcount
from lib.config import get
from lib.errors import require_capacity
from lib.logging_config import kvlog

from .linalg import FieldSpec, rank

logger = logging.getLogger(__name__)


class GradedBettiTable:
    """
    Map (homological index, multidegree) → count

    Multidegrees are exponent tuples over ctx. Projections give the
    (index, total degree) table and the totals β_i.
    """

    def __init__(self, ctx: RingContext, entries=None):
        self.ctx = ctx
        self.entries: Counter = Counter()
        if entries:
            for (i, mdeg), count in entries.items():
                self.add(i, mdeg, count)

    def add(self, i: int, mdeg, count: int = 1):
        if isinstance(mdeg, Monomial):
            mdeg = mdeg.exponents
        if count:
            self.entries[(i, tuple(mdeg))] += count

    def get(self, i: int, mdeg) -> int:
        if isinstance(mdeg, Monomial):
            mdeg = mdeg.exponents
        return self.entries.get((i, tuple(mdeg)), 0)

    def totals(self) -> tuple[int, ...]:
        if not self.entries:
            return (0,)
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), c in self.entries.items():
            out[i] += c
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)

    def graded(self) -> dict[tuple[int, int], int]:
        out: Counter = Counter()
        for (i, mdeg), c in self.entries.items():
            out[(i, sum(mdeg))] += c
        return dict(out)

    @property
    def pd(self) -> int:
        nonzero = [i for (i, _), c in self.entries.items() if c]
        return max(nonzero) if nonzero else 0

    def dominates(self, other: 'GradedBettiTable') -> bool:
        """Componentwise self >= other"""
        return all(self.entries.get(k, 0) >= c for k, c in other.entries.items())

    def __eq__(self, other):
        if not isinstance(other, GradedBettiTable):
            return NotImplemented
        mine = {k: c for k, c in self.entries.items() if c}
        theirs = {k: c for k, c in other.entries.items() if c}
        return mine == theirs

    def __repr__(self):
        return f"GradedBettiTable(totals={self.totals()})"

    def to_json(self):
        graded = self.graded()
        return {
            'totals': list(self.totals()),
            'graded': [
                {'i': i, 'deg': d, 'count': c} for (i, d), c in sorted(graded.items())
            ],
            'multigraded': [
                {'i': i, 'mdeg': list(m), 'count': c}
                for (i, m), c in sorted(self.entries.items()) if c
            ],
            'pd': self.pd,
        }


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _strand_homology(levels: dict[int, list[int]], coeff, field: FieldSpec) -> dict[int, int]:
    """
    Homology dimensions of a strand

    levels: homological index → basis symbols; coeff(col, row) gives the
    scalar entry of ∂ from col (index i) to row (index i-1).
    """
    ranks = {}
    for i in levels:
        rows = levels.get(i - 1, [])
        cols = levels[i]
        if i == 0 or not rows or not cols:
            ranks[i] = 0
            continue
        row_idx = {s: k for k, s in enumerate(rows)}
        M = [[0] * len(cols) for _ in rows]
        for j, col in enumerate(cols):
            for row, c in coeff(col):
                k = row_idx.get(row)
                if k is not None:
                    M[k][j] = c
        ranks[i] = rank(M, field)
    return {
        i: len(levels[i]) - ranks[i] - ranks.get(i + 1, 0)
        for i in levels
    }


def _lattice_checked(T):
    require_capacity('oracle generators', T.n, get('capacity.oracle_generators', 16))
    lattice = T.lcm_lattice()
    require_capacity('lcm lattice size', len(lattice), get('capacity.lcm_lattice', 1048576))
    return lattice


def tor_betti(I, field: FieldSpec | None = None) -> GradedBettiTable:
    """
    Graded Betti numbers of R/I over the field (default: configured prime)

    Raises:
        CapacityError: more than capacity.oracle_generators generators, or
            an lcm lattice above capacity.lcm_lattice
    """
    start = time.time()
    if field is None:
        field = FieldSpec.modular()
    T = complex_for(I)
    _lattice_checked(T)

    strands: dict[int, dict[int, list[int]]] = defaultdict(lambda: defaultdict(list))
    for sigma in range(T.full + 1):
        strands[T.lcm_id(sigma)][popcount(sigma)].append(sigma)

    def taylor_coeff(col):
        return [(col ^ (1 << g), incidence(col, col ^ (1 << g))) for g in bits(col)]

    table = GradedBettiTable(T.ideal.ctx)
    for ident, levels in strands.items():
        homology = _strand_homology(dict(levels), taylor_coeff, field)
        for i, h in homology.items():
            if h:
                table.add(i, T.value_of(ident), h)

    kvlog(logger, logging.DEBUG, op='tor_betti', n=T.n, field=str(field), strands=len(strands),
          totals=table.totals(), duration_ms=int((time.time() - start) * 1000))
    return table


@dataclass
class StrandReport:
    """Outcome of strand_exactness; witness is the first failing multidegree"""

    ok: bool
    checked: int = 0
    witness: tuple | None = None
    homology: dict = field(default_factory=dict)

    def to_json(self):
        out = {'ok': self.ok, 'checked': self.checked}
        if not self.ok:
            out['witness'] = {'mdeg': list(self.witness), 'homology': self.homology}
        return out


def strand_exactness(D, I, field: FieldSpec | None = None) -> StrandReport:
    """
    Certify that a Morse differential D is a resolution of R/I

    For each v in the lcm lattice, the strand on criticals with lcm | v must
    have H_i = 0 for i >= 1 and H_0 = k exactly when v = 1.
    """
    if field is None:
        field = FieldSpec.modular()
    T = complex_for(I)
    lattice = _lattice_checked(T)

    crit = [(s, T.lcm_exps(s), r) for r, syms in D.criticals.items() for s in syms]
    by_col: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for block in D.entries.values():
        for (row, col), c in block.items():
            by_col[col].append((row, c))

    one = (0,) * T.var_count
    report = StrandReport(ok=True)
    for v in lattice:
        levels: dict[int, list[int]] = defaultdict(list)
        for s, exps, r in crit:
            if _divides(exps, v):
                levels[r].append(s)
        homology = _strand_homology(dict(levels), lambda col: by_col.get(col, []), field)
        report.checked += 1
        expected_h0 = 1 if v == one else 0
        bad = any(h for i, h in homology.items() if i >= 1) or homology.get(0, 0) != expected_h0
        if bad:
            report.ok = False
            report.witness = v
            report.homology = {i: h for i, h in homology.items() if h}
            break
    return report
