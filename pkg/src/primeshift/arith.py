"""The additive functions B, beta and their shifted variants.

B(n) sums the prime divisors of n with multiplicity, beta(n) sums the
distinct prime divisors.  The shifted variant B_a agrees with B on
composites but sends a prime p to p + a (and likewise beta_a).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, RangeOverflowError
from .sieve import WORD_MAX, SieveTable, factorize, is_prime


@dataclass(frozen=True)
class Shift:
    """The perturbation a >= 0 applied at primes; a = 0 is the unshifted case."""

    a: int

    def __post_init__(self):
        if self.a < 0:
            raise DomainError(f"shift must be non-negative, got {self.a}")


def as_shift(shift: Shift | int) -> Shift:
    return shift if isinstance(shift, Shift) else Shift(int(shift))


def _check_domain(n: int, extend_domain: bool) -> int | None:
    """Handle the n in {0, 1} extension; return the extended value or None."""
    if n >= 2:
        return None
    if extend_domain and n in (0, 1):
        return n  # B(0) = 0 and B(1) = 1; both non-prime, the shift never applies
    raise DomainError(f"n must be >= 2 (got {n}); pass extend_domain=True for 0, 1")


def big_B(n: int, table: SieveTable, extend_domain: bool = False) -> int:
    """Sum of prime divisors of n with multiplicity."""
    ext = _check_domain(n, extend_domain)
    if ext is not None:
        return ext
    return sum(p * r for p, r in factorize(n, table).factors)


def small_beta(n: int, table: SieveTable, extend_domain: bool = False) -> int:
    """Sum of the distinct prime divisors of n."""
    ext = _check_domain(n, extend_domain)
    if ext is not None:
        return ext
    return sum(p for p, _ in factorize(n, table).factors)


def shifted_B(
    n: int,
    shift: Shift | int,
    table: SieveTable,
    extend_domain: bool = False,
) -> int:
    """B_a(n): n + a when n is prime, otherwise B(n)."""
    a = as_shift(shift).a
    ext = _check_domain(n, extend_domain)
    if ext is not None:
        return ext
    if is_prime(n, table):
        if n + a > WORD_MAX:
            raise RangeOverflowError(f"{n} + {a} exceeds the 64-bit range")
        return n + a
    return big_B(n, table)


def shifted_beta(
    n: int,
    shift: Shift | int,
    table: SieveTable,
    extend_domain: bool = False,
) -> int:
    """beta_a(n): n + a when n is prime, otherwise beta(n)."""
    a = as_shift(shift).a
    ext = _check_domain(n, extend_domain)
    if ext is not None:
        return ext
    if is_prime(n, table):
        if n + a > WORD_MAX:
            raise RangeOverflowError(f"{n} + {a} exceeds the 64-bit range")
        return n + a
    return small_beta(n, table)
