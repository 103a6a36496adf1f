"""
Monomials, monomial ideals and generator orderings

A Monomial is an exponent vector over a named RingContext. A MonomialIdeal
keeps a minimal generating set in a fixed index order (the order the
generators were listed in the input). A GenOrder is a separate value so the
same ideal can be analyzed under many total orders without copying.

Usage:
    ctx = RingContext.from_names('x y z w')
    I = minimize_generators([parse_monomial(t, ctx) for t in ('x*w', 'x*y', 'y*z', 'z*w')])
    ord = GenOrder.parse('0,1,2,3', I.n)
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from lib.errors import IdealError, InputError

logger = logging.getLogger(__name__)

# Exponents are kept below a 32-bit bound
EXPONENT_LIMIT = 2 ** 31

_VAR_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


@dataclass(frozen=True)
class RingContext:
    """Variable names of the polynomial ring k[x_1, ..., x_N]"""

    var_names: tuple[str, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, 'var_names', names)
        if not names:
            raise IdealError("Ring context needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _VAR_RE.match(name):
                raise IdealError(f"Invalid variable name: {name!r}")
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise IdealError(f"Duplicate variable names: {', '.join(dupes)}")
        object.__setattr__(self, '_index', {n: i for i, n in enumerate(names)})

    @classmethod
    def from_names(cls, names):
        """Build from a whitespace-separated string or an iterable of names"""
        if isinstance(names, str):
            names = names.split()
        return cls(tuple(names))

    @property
    def var_count(self):
        return len(self.var_names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise IdealError(
                f"Unknown variable {name!r}; ring has {', '.join(self.var_names)}"
            ) from None

    def one(self):
        return Monomial((0,) * self.var_count, self)

    def variable(self, name, power=1):
        exps = [0] * self.var_count
        exps[self.index(name)] = power
        return Monomial(tuple(exps), self)

    def union(self, other):
        """Context holding the variables of both (self's first, in order)"""
        extra = [n for n in other.var_names if n not in self._index]
        return RingContext(self.var_names + tuple(extra))


@dataclass(frozen=True)
class Monomial:
    """Exponent vector over a ring context"""

    exponents: tuple[int, ...]
    ctx: RingContext

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, 'exponents', exps)
        if len(exps) != self.ctx.var_count:
            raise IdealError(
                f"Exponent vector has length {len(exps)}, ring has {self.ctx.var_count} variables"
            )
        for e in exps:
            if e < 0:
                raise IdealError(f"Negative exponent in {exps}")
            if e >= EXPONENT_LIMIT:
                raise IdealError(f"Exponent {e} overflows the 2^31 bound")

    def _check(self, other):
        if self.ctx != other.ctx:
            raise IdealError(
                f"Ring context mismatch: ({', '.join(self.ctx.var_names)}) vs "
                f"({', '.join(other.ctx.var_names)})"
            )

    def lcm(self, other):
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)), self.ctx)

    def gcd(self, other):
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)), self.ctx)

    def divides(self, other):
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other):
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.ctx)

    def quotient(self, other):
        """self / other; other must divide self"""
        if not other.divides(self):
            raise IdealError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)), self.ctx)

    @property
    def degree(self):
        return sum(self.exponents)

    def is_one(self):
        return not any(self.exponents)

    def support(self):
        return [self.ctx.var_names[i] for i, e in enumerate(self.exponents) if e]

    def __str__(self):
        return format_monomial(self)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise maximum of exponent vectors"""
    return a.lcm(b)


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff every exponent of a is at most the corresponding exponent of b"""
    return a.divides(b)


def lcm_all(monomials: Iterable[Monomial], ctx: RingContext) -> Monomial:
    result = ctx.one()
    for m in monomials:
        result = result.lcm(m)
    return result


def format_monomial(m: Monomial, sep='*') -> str:
    parts = []
    for name, e in zip(m.ctx.var_names, m.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sep.join(parts) if parts else '1'


_FACTOR_RE = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)(?:\^([0-9]+))?$')


def parse_monomial(text: str, ctx: RingContext) -> Monomial:
    """
    Parse monomial := factor ('*' factor)*, factor := var ('^' positive-int)?

    Exponents of repeated variables are summed.

    Examples:
        parse_monomial('x*w', ctx) → (1, 0, 0, 1) over x y z w
        parse_monomial('x*x^2', ctx) → (3, ...)

    Raises:
        InputError: empty text, malformed factor or exponent, unknown variable
    """
    if text is None or not text.strip():
        raise InputError("Empty monomial")
    exps = [0] * ctx.var_count
    for raw in text.split('*'):
        factor = raw.strip()
        match = _FACTOR_RE.match(factor)
        if not match:
            raise InputError(f"Malformed factor {factor!r} in monomial {text!r}")
        name, power = match.group(1), match.group(2)
        if power is None:
            e = 1
        else:
            e = int(power)
            if e <= 0:
                raise InputError(f"Exponent must be positive in {factor!r}")
        exps[ctx.index(name)] += e
    return Monomial(tuple(exps), ctx)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal with a minimal generating set gens[0..n-1]"""

    ctx: RingContext
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, 'gens', gens)
        if not gens:
            raise IdealError("Degenerate ideal: no generators")
        for g in gens:
            if g.ctx != self.ctx:
                raise IdealError("Generator ring context does not match ideal context")
            if g.is_one():
                raise IdealError("Degenerate ideal: the unit ideal (generator 1)")
        for i, a in enumerate(gens):
            for j, b in enumerate(gens):
                if i != j and a.divides(b):
                    raise IdealError(
                        f"Generators are not minimal: gens[{i}]={a} divides gens[{j}]={b}"
                    )

    @property
    def n(self):
        return len(self.gens)

    def __len__(self):
        return len(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def index_of(self, m: Monomial):
        for i, g in enumerate(self.gens):
            if g == m:
                return i
        raise IdealError(f"{m} is not a minimal generator")

    def contains(self, m: Monomial):
        return any(g.divides(m) for g in self.gens)

    def exponent_rows(self):
        return [g.exponents for g in self.gens]

    def __str__(self):
        return '(' + ', '.join(format_monomial(g) for g in self.gens) + ')'


def minimize_generators(raw: Sequence[Monomial]) -> MonomialIdeal:
    """
    Remove duplicates and any monomial divisible by another.

    Survivors keep their first-occurrence order.

    Examples:
        [xy, xyz, zw] → (xy, zw)
        [x^2, x^2, y] → (x^2, y)

    Raises:
        IdealError: empty input, mixed contexts, or the unit ideal
    """
    raw = list(raw)
    if not raw:
        raise IdealError("Cannot build an ideal from an empty generator list")
    ctx = raw[0].ctx
    for m in raw:
        if m.ctx != ctx:
            raise IdealError("Generators come from different ring contexts")

    unique = []
    seen = set()
    for m in raw:
        if m.exponents not in seen:
            seen.add(m.exponents)
            unique.append(m)

    survivors = [
        m for i, m in enumerate(unique)
        if not any(j != i and o.divides(m) for j, o in enumerate(unique))
    ]
    return MonomialIdeal(ctx, tuple(survivors))


def ideal_from_exponents(var_names, rows) -> MonomialIdeal:
    """Build an ideal from variable names and exponent rows, minimizing"""
    ctx = RingContext.from_names(var_names)
    return minimize_generators([Monomial(tuple(r), ctx) for r in rows])


def embed(I: MonomialIdeal, ctx: RingContext) -> MonomialIdeal:
    """Move I into a context containing all of its variables (matched by name)"""
    idx = [ctx.index(name) for name in I.ctx.var_names]
    gens = []
    for g in I.gens:
        exps = [0] * ctx.var_count
        for src, dst in enumerate(idx):
            exps[dst] = g.exponents[src]
        gens.append(Monomial(tuple(exps), ctx))
    return MonomialIdeal(ctx, tuple(gens))


def restrict_context(I: MonomialIdeal) -> MonomialIdeal:
    """Drop variables that no generator uses"""
    used = [i for i in range(I.ctx.var_count) if any(g.exponents[i] for g in I.gens)]
    ctx = RingContext(tuple(I.ctx.var_names[i] for i in used))
    return MonomialIdeal(ctx, tuple(Monomial(tuple(g.exponents[i] for i in used), ctx) for g in I.gens))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I + J on the union of both contexts"""
    ctx = I.ctx.union(J.ctx)
    return minimize_generators(list(embed(I, ctx).gens) + list(embed(J, ctx).gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of I ∩ J: the minimized pairwise lcms"""
    ctx = I.ctx.union(J.ctx)
    I2, J2 = embed(I, ctx), embed(J, ctx)
    return minimize_generators([a.lcm(b) for a in I2.gens for b in J2.gens])


@dataclass(frozen=True)
class GenOrder:
    """
    Total order >_I on generator indices.

    perm[0] is the LARGEST generator. a >_I b iff a comes before b in perm.
    """

    perm: tuple[int, ...]
    pos: tuple[int, ...] = field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        object.__setattr__(self, 'perm', perm)
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise InputError(f"Order {list(perm)} is not a permutation of 0..{n - 1}")
        pos = [0] * n
        for rank, g in enumerate(perm):
            pos[g] = rank
        object.__setattr__(self, 'pos', tuple(pos))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_ranking(cls, ranking):
        """From a list of generator indices, largest first"""
        return cls(tuple(ranking))

    @classmethod
    def parse(cls, text, n=None):
        """
        Parse a comma-separated generator list, largest first ("3,0,1,2")

        Raises:
            InputError: non-integer entries, wrong length, not a permutation
        """
        try:
            perm = tuple(int(p) for p in str(text).replace(' ', '').split(',') if p != '')
        except ValueError:
            raise InputError(f"Order must be comma-separated generator indices, got {text!r}") from None
        if n is not None and len(perm) != n:
            raise InputError(f"Order {text!r} lists {len(perm)} generators, ideal has {n}")
        return cls(perm)

    @property
    def n(self):
        return len(self.perm)

    def position(self, g):
        return self.pos[g]

    def dominates(self, a, b):
        """Strict a >_I b"""
        return self.pos[a] < self.pos[b]

    def smallest(self, indices):
        """>_I-least generator among indices (None if empty)"""
        best = None
        for g in indices:
            if best is None or self.pos[g] > self.pos[best]:
                best = g
        return best

    def largest(self, indices):
        best = None
        for g in indices:
            if best is None or self.pos[g] < self.pos[best]:
                best = g
        return best

    def descending(self, indices):
        """Indices sorted from >_I-largest to smallest"""
        return sorted(indices, key=lambda g: self.pos[g])

    def check_size(self, n):
        if self.n != n:
            raise InputError(f"Order has {self.n} generators, ideal has {n}")

    def __str__(self):
        return ','.join(str(p) for p in self.perm)
