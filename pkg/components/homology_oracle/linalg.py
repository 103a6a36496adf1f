"""
Exact matrix rank over F_p and over Q

Modular rank runs dense Gaussian elimination on int64 numpy arrays; every
intermediate stays below p^2 < 2^62. Rational rank is fraction-free: rows
are combined with integer multipliers and divided by their content, so no
fractions and no unbounded growth.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

import numpy as np

from lib.config import get
from lib.config_validator import is_prime
from lib.errors import InputError

PRIME_LIMIT = 2 ** 31


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: F_p when prime is set, Q (characteristic 0) otherwise"""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and (not is_prime(self.prime) or self.prime >= PRIME_LIMIT):
            raise InputError(f"Field characteristic {self.prime} is not a prime below 2^31")

    @classmethod
    def rational(cls):
        return cls(None)

    @classmethod
    def modular(cls, p=None):
        return cls(p if p is not None else get('field.prime', 32003))

    @classmethod
    def parse(cls, text):
        """'0', 'Q' or 'rational' for characteristic 0, otherwise a prime"""
        if str(text).strip().lower() in ('0', 'q', 'rational'):
            return cls.rational()
        try:
            return cls(int(text))
        except ValueError:
            raise InputError(f"Field must be a prime or 0, got {text!r}") from None

    @property
    def characteristic(self):
        return self.prime or 0

    def __str__(self):
        return f"F_{self.prime}" if self.prime else 'Q'


def _rank_modp(A: np.ndarray, p: int) -> int:
    A = np.mod(A, p)
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        pivot = r + int(nz[0])
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        inv = pow(int(A[r, c]), -1, p)
        A[r, :] = (A[r, :] * inv) % p
        below = A[r + 1:, c].copy()
        if below.any():
            A[r + 1:, :] = (A[r + 1:, :] - np.outer(below, A[r, :]) % p) % p
        r += 1
    return r


def _content(row):
    return reduce(gcd, row, 0)


def _rank_fraction_free(rows: list[list[int]]) -> int:
    M = [list(map(int, row)) for row in rows if any(row)]
    m = len(M)
    if m == 0:
        return 0
    n = len(M[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if M[i][c]), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        prow = M[r]
        a = prow[c]
        for i in range(r + 1, m):
            b = M[i][c]
            if not b:
                continue
            row = [a * x - b * y for x, y in zip(M[i], prow)]
            g = _content(row)
            M[i] = [x // g for x in row] if g > 1 else row
        r += 1
    return r


def rank(M, field: FieldSpec | None = None) -> int:
    """
    Rank of an integer matrix over the given field (default: configured prime)

    Examples:
        rank([[2], [4]], FieldSpec(2)) → 0
        rank([[2], [4]], FieldSpec.rational()) → 1
    """
    if field is None:
        field = FieldSpec.modular()
    arr = np.asarray(M, dtype=object)
    if arr.size == 0:
        return 0
    if arr.ndim != 2:
        raise InputError(f"rank() needs a 2-D matrix, got shape {arr.shape}")
    if field.prime is None:
        return _rank_fraction_free(arr.tolist())
    reduced = np.array([[int(x) % field.prime for x in row] for row in arr.tolist()], dtype=np.int64)
    return _rank_modp(reduced, field.prime)
