"""Smallest-prime-factor sieve, primality testing, and integer factorization.

The sieve covers a fixed range [2, limit]; everything above the limit is
handled by trial division against the sieve primes, a deterministic
Miller-Rabin test (complete witness set for the 64-bit range), and a
Brent-variant rho splitter for the rare composites that survive both.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeOverflowError

#: Largest integer the package commits to handling exactly (signed 64-bit).
WORD_MAX = 2**63 - 1

# Complete deterministic witness set for n < 3.3 * 10^24, covers WORD_MAX.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_DEFAULT_RNG = random.Random(0x5EED)


def set_default_seed(seed: int) -> None:
    """Reseed the fallback rng used by the rho splitter (reproducibility)."""
    global _DEFAULT_RNG
    _DEFAULT_RNG = random.Random(seed)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of n as an ordered tuple of (prime, exponent)."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def product(self) -> int:
        out = 1
        for p, r in self.factors:
            out *= p**r
        return out


class SieveTable:
    """Immutable smallest-prime-factor table for 2 <= n <= limit.

    spf[n] is the least prime dividing n; spf[p] == p exactly for primes.
    The backing array is marked read-only, so instances are safe to share
    across threads and processes.
    """

    __slots__ = ("limit", "spf", "_primes")

    def __init__(self, limit: int, spf: np.ndarray):
        self.limit = limit
        self.spf = spf
        self._primes = None

    def primes(self) -> np.ndarray:
        """All primes <= limit, ascending (computed once, then cached)."""
        if self._primes is None:
            idx = np.arange(self.limit + 1, dtype=self.spf.dtype)
            primes = np.nonzero(self.spf == idx)[0]
            primes = primes[primes >= 2]
            primes.setflags(write=False)
            self._primes = primes
        return self._primes


def build_sieve(limit: int) -> SieveTable:
    """Build the smallest-prime-factor table up to limit (inclusive)."""
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if limit > WORD_MAX:
        raise DomainError(f"sieve limit {limit} exceeds the 64-bit range")
    spf = np.zeros(limit + 1, dtype=np.int64)
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == 0:
            block = spf[i * i :: i]
            block[block == 0] = i
    # Remaining zeros at n >= 2 are primes (no factor <= sqrt(limit)).
    unmarked = np.nonzero(spf == 0)[0]
    spf[unmarked] = unmarked
    spf[0] = 0
    spf[1] = 0
    spf.setflags(write=False)
    return SieveTable(limit, spf)


def _miller_rabin(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int, table: SieveTable | None = None) -> bool:
    """Exact primality for 0 <= n <= WORD_MAX.

    Uses a sieve lookup when a table covering n is supplied, otherwise a
    deterministic strong-pseudoprime test.
    """
    if n < 2:
        return False
    if table is not None and n <= table.limit:
        return int(table.spf[n]) == n
    return _miller_rabin(n)


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of composite, odd, non-prime-power n."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_hard(n: int, rng: random.Random, out: dict[int, int]) -> None:
    """Factor n (no prime factor found by the trial-division stage)."""
    if n == 1:
        return
    if _miller_rabin(n):
        out[n] = out.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        # rho is unreliable on perfect squares; split exactly instead
        _factor_hard(root, rng, out)
        _factor_hard(root, rng, out)
        return
    d = _pollard_brent(n, rng)
    _factor_hard(d, rng, out)
    _factor_hard(n // d, rng, out)


def factorize(
    n: int, table: SieveTable, rng: random.Random | None = None
) -> Factorization:
    """Full prime factorization of n.

    Below the sieve limit this is a pure spf-chain walk. Above it, trial
    division by sieve primes strips small factors, then Miller-Rabin plus
    rho splitting finishes the cofactor. The rho stage is randomized but
    every reported prime is verified, so results are always exact.
    """
    if n < 2:
        raise DomainError(f"factorize requires n >= 2, got {n}")
    if n > WORD_MAX:
        raise RangeOverflowError(f"{n} exceeds the supported 64-bit range")
    found: dict[int, int] = {}
    if n <= table.limit:
        spf = table.spf
        m = n
        while m > 1:
            p = int(spf[m])
            r = 0
            while m % p == 0:
                m //= p
                r += 1
            found[p] = r
    else:
        m = n
        bound = math.isqrt(n)
        for p in table.primes():
            p = int(p)
            if p > bound:
                break
            if m % p == 0:
                r = 0
                while m % p == 0:
                    m //= p
                    r += 1
                found[p] = r
                bound = math.isqrt(m)
        if m > 1:
            _factor_hard(m, rng or _DEFAULT_RNG, found)
    factors = tuple(sorted(found.items()))
    return Factorization(n, factors)
