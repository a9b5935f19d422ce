"""Bulk value tables: vectorized B, beta and the orbit step map.

The census and partial-sum modules never call the scalar functions in a
loop; they work off flat numpy arrays built here in a handful of sieve
passes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arith import Shift, as_shift
from .sieve import SieveTable


@dataclass(frozen=True)
class ValueTable:
    """Flat arrays over [0, limit]: big_b[n] = B(n), beta[n] = beta(n).

    Entries at n = 0, 1 are 0 and are never consulted by census code.
    prime_mask[n] is True exactly at primes.
    """

    limit: int
    big_b: np.ndarray
    beta: np.ndarray
    prime_mask: np.ndarray

    def prime_count(self, x: int) -> int:
        """pi(x) for x <= limit."""
        return int(np.count_nonzero(self.prime_mask[: x + 1]))


def build_value_table(table: SieveTable) -> ValueTable:
    """Accumulate B and beta over the whole sieve range.

    One slice-add per prime power for B, one per prime for beta; total
    work is O(limit * log log limit) array element updates.
    """
    limit = table.limit
    big_b = np.zeros(limit + 1, dtype=np.int64)
    beta = np.zeros(limit + 1, dtype=np.int64)
    for p in table.primes().tolist():
        beta[p::p] += p
        q = p
        while q <= limit:
            big_b[q::q] += p
            q *= p
    prime_mask = table.spf == np.arange(limit + 1, dtype=table.spf.dtype)
    prime_mask[:2] = False
    for arr in (big_b, beta, prime_mask):
        arr.setflags(write=False)
    return ValueTable(limit, big_b, beta, prime_mask)


def step_map(vt: ValueTable, shift: Shift | int) -> np.ndarray:
    """f[n] = B_a(n) for 2 <= n <= limit, as a writable int64 array.

    f[0] = 0 and f[1] = 1 (self-loops, matching the domain extension).
    Entries at primes near the top of the table may exceed the limit;
    callers that index with f must patch those first.
    """
    a = as_shift(shift).a
    n = np.arange(vt.limit + 1, dtype=np.int64)
    f = np.where(vt.prime_mask, n + a, vt.big_b)
    f[0] = 0
    f[1] = 1
    return f
