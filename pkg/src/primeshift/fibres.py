"""Prime-partition counting and the fibres of B over a fixed value.

kappa(m) counts multisets of primes summing to m; by unique factorization
these biject with the solutions of B(n) = m (each partition corresponds
to n = product of its parts), which is what makes kappa the fibre size.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np

from .arith import Shift, as_shift, shifted_B
from .errors import ConsistencyError, DomainError
from .sieve import SieveTable, is_prime
from .tables import ValueTable, build_value_table, step_map


@dataclass(frozen=True)
class KappaTable:
    """kappa[m] = number of partitions of m into primes, for 1 <= m <= limit.

    Values are exact Python integers (they grow superpolynomially).
    beta_partial holds the beta(i) values feeding the recursion.
    """

    limit: int
    kappa: tuple[int, ...]
    beta_partial: tuple[int, ...]

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= self.limit:
            raise DomainError(f"kappa known only for 1..{self.limit}, got {m}")
        return self.kappa[m]


def build_kappa(limit: int, table: SieveTable, value_table: ValueTable | None = None) -> KappaTable:
    """Fill the kappa table from the beta-weighted recursion.

    n * kappa(n) = beta(n) + sum_{i=1}^{n-1} kappa(n - i) * beta(i), with
    kappa(1) = 0.  All arithmetic is exact; the division by n is asserted
    to be exact, a nonzero remainder would mean an implementation bug.
    """
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    if value_table is not None and value_table.limit >= limit:
        beta = [int(v) for v in value_table.beta[: limit + 1]]
    else:
        if table.limit < limit:
            raise DomainError("sieve must cover the kappa limit")
        from .arith import small_beta

        beta = [0, 0] + [small_beta(i, table) for i in range(2, limit + 1)]
    kappa: list[int] = [0, 0]  # kappa[0] unused, kappa[1] = 0
    for n in range(2, limit + 1):
        # pairs kappa[j] with beta[n - j]; map/operator keeps the inner
        # loop in C, which matters at limit ~ 10^4
        conv = sum(map(operator.mul, kappa[1:n], beta[n - 1 : 0 : -1]))
        q, r = divmod(beta[n] + conv, n)
        if r:
            raise ConsistencyError(f"kappa recursion not divisible at n={n}")
        kappa.append(q)
    return KappaTable(limit, tuple(kappa), tuple(beta))


def prime_partitions(m: int, table: SieveTable):
    """Yield all multisets of primes summing to m, parts non-increasing."""
    primes = [p for p in range(2, m + 1) if is_prime(p, table)]

    def rec(remaining, max_idx, acc):
        if remaining == 0:
            yield tuple(acc)
            return
        for i in range(max_idx, -1, -1):
            p = primes[i]
            if p <= remaining:
                acc.append(p)
                yield from rec(remaining - p, i, acc)
                acc.pop()

    yield from rec(m, len(primes) - 1, [])


def enumerate_fibre(
    m: int,
    shift: Shift | int,
    x_bound: int,
    table: SieveTable,
    value_table: ValueTable | None = None,
) -> list[int]:
    """All n <= x_bound with B_a(n) = m, ascending."""
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    shift = as_shift(shift)
    if value_table is not None and x_bound <= value_table.limit:
        f = step_map(value_table, shift)
        hits = np.nonzero(f[2 : x_bound + 1] == m)[0] + 2
        return [int(v) for v in hits]
    return [
        n
        for n in range(2, x_bound + 1)
        if shifted_B(n, shift, table) == m
    ]


def enumerate_fibre_exact(m: int, table: SieveTable) -> list[int]:
    """All solutions of B(n) = m (unshifted), with no bound on n.

    Generates n as the product of each prime partition of m; products are
    pairwise distinct by unique factorization, which is asserted.
    """
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    out = []
    for parts in prime_partitions(m, table):
        n = 1
        for p in parts:
            n *= p
        out.append(n)
    if len(set(out)) != len(out):
        raise ConsistencyError("partition products collided")
    return sorted(out)


def kappa_asymptotic_ratio(m: int, ktable: KappaTable) -> float:
    """log kappa(m) normalized by its limiting growth 2*pi*sqrt(m / (3 log m))."""
    if m < 3:
        raise DomainError(f"m must be >= 3, got {m}")
    value = ktable[m]
    return math.log(value) / (2 * math.pi * math.sqrt(m / (3 * math.log(m))))


def preimage_density(
    target_set,
    x: int,
    table: SieveTable,
    value_table: ValueTable | None = None,
) -> tuple[int, float]:
    """(count, density) of {n <= x : B(n) in target_set}.

    target_set is a predicate over positive integers; it is evaluated once
    per distinct B-value (B(n) <= n <= x), then counts are vectorized.
    """
    vt = value_table if value_table is not None else build_value_table(table)
    if x > vt.limit:
        raise DomainError(f"x={x} exceeds table limit {vt.limit}")
    values = vt.big_b[2 : x + 1]
    top = int(values.max()) if values.size else 0
    member = np.zeros(top + 1, dtype=bool)
    for v in range(top + 1):
        member[v] = bool(target_set(v))
    count = int(np.count_nonzero(member[values]))
    return count, count / x
