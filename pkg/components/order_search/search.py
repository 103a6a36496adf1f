"""
Search over generator orders for friendly and minimal certificates

Exhaustive mode walks permutations in lexicographic order. The walk is cut
into chunks by a fixed prefix; with more than one worker process the chunks
run in a multiprocessing Pool and come back in prefix order, so reports do
not depend on the worker count (unless a time budget cuts the walk).

Random mode draws permutations from a seeded generator and can only find
witnesses, never rule them out.
"""

from __future__ import annotations

import enum
import logging
import random
import time
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from multiprocessing import Pool

from components.homology_oracle import FieldSpec, tor_betti
from components.ideal_core import GenOrder, MonomialIdeal
from components.matching_engine import bridge_matching, is_bridge_friendly
from components.morse_complex import betti_from_criticals, differential, is_minimal
from lib.config import get
from lib.errors import BudgetExceeded, InputError, require_capacity
from lib.logging_config import format_duration, kvlog

logger = logging.getLogger(__name__)

DEFAULT_RANDOM_ORDERS = 1000


class Verdict(enum.Enum):
    FOUND = 'found'
    EXHAUSTED_NONE = 'exhausted-none'
    BUDGET_EXCEEDED = 'budget-exceeded'

    def __str__(self):
        return self.value


@dataclass
class SearchBudget:
    """Limits on a search; None means unlimited"""

    orders: int | None = None
    seconds: float | None = None

    @classmethod
    def from_config(cls, orders=None, seconds=None):
        return cls(
            orders if orders is not None else get('search.budget_orders'),
            seconds if seconds is not None else get('search.budget_seconds'),
        )


@dataclass
class SearchReport:
    kind: str
    mode: str
    verdict: Verdict = Verdict.EXHAUSTED_NONE
    witnesses: list[GenOrder] = field(default_factory=list)
    orders_examined: int = 0
    total_orders: int = 0
    elapsed: float = 0.0
    seed: int | None = None
    reduced: bool = False

    @property
    def found(self) -> bool:
        return self.verdict == Verdict.FOUND

    def to_json(self):
        out = {
            'kind': self.kind,
            'mode': self.mode,
            'verdict': str(self.verdict),
            'witnesses': [list(w.perm) for w in self.witnesses],
            'orders_examined': self.orders_examined,
            'total_orders': self.total_orders,
            'elapsed_ms': int(self.elapsed * 1000),
            'reduced': self.reduced,
        }
        if self.seed is not None:
            out['seed'] = self.seed
        return out

    def __str__(self):
        lines = [
            f"{self.kind} search ({self.mode}{', dihedral reduction' if self.reduced else ''}): {self.verdict}",
            f"  orders examined: {self.orders_examined} of {self.total_orders}",
            f"  elapsed: {format_duration(int(self.elapsed * 1000))}",
        ]
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        for w in self.witnesses:
            lines.append(f"  witness: {w}")
        return '\n'.join(lines)


# =============================================================================
# Order checks (module level so worker processes can unpickle them)
# =============================================================================

def _check_friendly(I, perm, oracle):
    return is_bridge_friendly(I, GenOrder(perm))


def _check_minimal(I, perm, oracle):
    A = bridge_matching(I, GenOrder(perm))
    if betti_from_criticals(A, I) != oracle:
        return False
    return is_minimal(differential(A, I))


CHECKS = {'friendly': _check_friendly, 'minimal': _check_minimal}


# =============================================================================
# Dihedral reduction
# =============================================================================

def _reflect(perm, n):
    return tuple((-g) % n for g in perm)


def _is_representative(perm, n) -> bool:
    return perm[0] == 0 and perm <= _reflect(perm, n)


def cycle_symmetry_reduction(n: int):
    """
    One order per dihedral orbit of a cycle's generator indices

    Generator i is assumed adjacent to i-1 and i+1 (mod n). Representatives
    start with generator 0 and are no larger than their mirror image.

    Examples:
        n=3 → 1 representative, n=4 → 3
    """
    if n < 3:
        yield from permutations(range(n))
        return
    for tail in permutations(range(1, n)):
        perm = (0,) + tail
        if _is_representative(perm, n):
            yield perm


def reduced_order_count(n: int) -> int:
    return factorial(n) if n < 3 else factorial(n - 1) // 2


def is_cycle_listing(I: MonomialIdeal) -> bool:
    """Squarefree quadrics forming a cycle in listing order (unweighted cycle edge ideal)"""
    n = I.n
    if n < 3 or I.ctx.var_count < n:
        return False
    for g in I.gens:
        if g.degree != 2 or max(g.exponents) != 1:
            return False
    for i in range(n):
        if I.gens[i].gcd(I.gens[(i + 1) % n]).is_one():
            return False
    return len({v for g in I.gens for v in g.support()}) == n


# =============================================================================
# Exhaustive walk
# =============================================================================

def _prefixes(n: int, reduced: bool):
    if reduced and n >= 3:
        return [(0, a) for a in range(1, n)]
    if n >= 3:
        return list(permutations(range(n), 2))
    return [()]


def _scan_chunk(task):
    """
    Walk all orders starting with prefix

    Returns a dict with 'examined', 'witnesses' (index within the chunk,
    perm) and 'complete' (False when a limit cut the walk short).
    """
    I, kind, prefix, reduced, cap, limit, deadline, oracle = task
    n = I.n
    check = CHECKS[kind]
    rest = [g for g in range(n) if g not in prefix]
    examined = 0
    witnesses = []
    for tail in permutations(rest):
        perm = tuple(prefix) + tail
        if reduced and n >= 3 and not _is_representative(perm, n):
            continue
        if (limit is not None and examined >= limit) or (deadline is not None and time.time() > deadline):
            return {'examined': examined, 'witnesses': witnesses, 'complete': False}
        examined += 1
        if check(I, perm, oracle):
            witnesses.append((examined - 1, perm))
            if len(witnesses) >= cap:
                break
    return {'examined': examined, 'witnesses': witnesses, 'complete': True}


def _exhaustive(I, kind, report, budget, cap, threads, oracle):
    n = I.n
    deadline = time.time() + budget.seconds if budget.seconds is not None else None
    tasks = [(I, kind, p, report.reduced, cap, budget.orders, deadline, oracle) for p in _prefixes(n, report.reduced)]

    offset = 0
    truncated = False
    capped = False

    def merge(results):
        nonlocal offset, truncated, capped
        for res in results:
            if budget.orders is not None and offset >= budget.orders and (res['examined'] or not res['complete']):
                truncated = True
                return
            for idx, perm in res['witnesses']:
                if budget.orders is not None and offset + idx >= budget.orders:
                    break
                report.witnesses.append(GenOrder(perm))
                if len(report.witnesses) >= cap:
                    offset += idx + 1
                    capped = True
                    return
            offset += res['examined']
            if budget.orders is not None and offset > budget.orders:
                offset = budget.orders
                truncated = True
                return
            if not res['complete']:
                truncated = True
                return

    if threads > 1:
        with Pool(threads) as pool:
            merge(pool.imap(_scan_chunk, tasks))
    else:
        def serial():
            for task in tasks:
                remaining = None if budget.orders is None else max(budget.orders - offset, 0)
                yield _scan_chunk(task[:5] + (remaining,) + task[6:])
        merge(serial())

    report.orders_examined = offset
    return truncated and not capped


def _random(I, kind, report, budget, cap, oracle):
    n = I.n
    rng = random.Random(report.seed)
    check = CHECKS[kind]
    orders = budget.orders
    if orders is None and budget.seconds is None:
        orders = min(factorial(n), DEFAULT_RANDOM_ORDERS)
        kvlog(logger, logging.INFO, search='random', note='no budget given', orders=orders)
    deadline = time.time() + budget.seconds if budget.seconds is not None else None
    seen = set()
    while True:
        if orders is not None and report.orders_examined >= orders:
            return True
        if deadline is not None and time.time() > deadline:
            return True
        perm = tuple(rng.sample(range(n), n))
        report.orders_examined += 1
        if perm not in seen and check(I, perm, oracle):
            seen.add(perm)
            report.witnesses.append(GenOrder(perm))
            if len(report.witnesses) >= cap:
                return False


def _search(I: MonomialIdeal, kind: str, mode: str, budget: SearchBudget | None, seed, witness_cap,
            threads, reduce_cycle: bool, force: bool, oracle) -> SearchReport:
    if mode not in ('exhaustive', 'random'):
        raise InputError(f"Unknown search mode {mode!r}; use exhaustive or random")
    budget = budget or SearchBudget.from_config()
    cap = witness_cap if witness_cap is not None else get('search.witness_cap', 5)
    threads = threads if threads is not None else get('search.threads', 1)
    if cap < 1:
        raise InputError(f"witness cap must be at least 1, got {cap}")
    if reduce_cycle and not is_cycle_listing(I):
        raise InputError("Dihedral reduction needs an unweighted cycle listed in cycle order")

    n = I.n
    report = SearchReport(kind=kind, mode=mode, reduced=reduce_cycle and mode == 'exhaustive')
    if mode == 'exhaustive':
        if not force:
            require_capacity('exhaustive search generators', n, get('search.exhaustive_max_generators', 10))
        report.total_orders = reduced_order_count(n) if report.reduced else factorial(n)
    else:
        report.seed = seed if seed is not None else get('search.seed', 0)
        report.total_orders = factorial(n)

    kvlog(logger, logging.NOTICE, search=kind, mode=mode, n=n, total=report.total_orders,
          reduced=report.reduced, threads=threads)
    start = time.time()
    if mode == 'exhaustive':
        truncated = _exhaustive(I, kind, report, budget, cap, threads, oracle)
    else:
        truncated = _random(I, kind, report, budget, cap, oracle)
    report.elapsed = time.time() - start

    if report.witnesses:
        report.verdict = Verdict.FOUND
    elif truncated:
        report.verdict = Verdict.BUDGET_EXCEEDED
    else:
        report.verdict = Verdict.EXHAUSTED_NONE
    kvlog(logger, logging.NOTICE, search=kind, verdict=str(report.verdict), examined=report.orders_examined,
          witnesses=len(report.witnesses), duration=format_duration(int(report.elapsed * 1000)))

    if report.verdict == Verdict.BUDGET_EXCEEDED:
        raise BudgetExceeded(
            f"{kind} search stopped after {report.orders_examined} orders without a witness",
            report=report,
        )
    return report


def search_friendly(I: MonomialIdeal, mode: str = 'exhaustive', budget: SearchBudget | None = None,
                    seed: int | None = None, witness_cap: int | None = None, threads: int | None = None,
                    reduce_cycle: bool = False, force: bool = False) -> SearchReport:
    """
    Look for orders under which I is bridge-friendly

    Raises:
        CapacityError: exhaustive mode above search.exhaustive_max_generators without force
        BudgetExceeded: the budget ran out before any witness; carries the partial report
    """
    return _search(I, 'friendly', mode, budget, seed, witness_cap, threads, reduce_cycle, force, None)


def search_minimal(I: MonomialIdeal, mode: str = 'exhaustive', budget: SearchBudget | None = None,
                   field: FieldSpec | None = None, seed: int | None = None, witness_cap: int | None = None,
                   threads: int | None = None, reduce_cycle: bool = False, force: bool = False) -> SearchReport:
    """
    Look for orders under which I is bridge-minimal

    The graded Betti table is computed once; an order is only confirmed
    with the differential when its critical multidegrees match that table.
    Over the default field the oracle runs in characteristic 0 when
    field.rational_verdicts is set.
    """
    if field is None:
        field = FieldSpec.rational() if get('field.rational_verdicts', True) else FieldSpec.modular()
    oracle = tor_betti(I, field)
    return _search(I, 'minimal', mode, budget, seed, witness_cap, threads, reduce_cycle, force, oracle)
