"""Orbits of the shifted map: iteration, cycle detection, stopping times.

Default cycle detection keeps a hash map of visited values, which gives
the exact cycle-entry index in one pass.  A memory-capped mode based on
Brent's algorithm is available for bulk work where retaining the visited
set per orbit is too expensive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Shift, as_shift, shifted_B, shifted_beta
from .errors import ConsistencyError, NonterminationError
from .sieve import SieveTable, is_prime


@dataclass(frozen=True)
class OrbitRecord:
    """Trajectory of start under B_a up to and including one cycle period.

    trajectory ends with the first repeated value, so
    trajectory[entry_index:-1] is the cycle and
    trajectory[-1] == trajectory[entry_index].
    stopping_time is the least k with trajectory[k] < start (None if the
    orbit never drops below its start); total_stopping_time is the number
    of steps taken before entering the cycle, i.e. entry_index.
    """

    start: int
    shift: Shift
    trajectory: tuple[int, ...]
    entry_index: int

    @property
    def cycle(self) -> tuple[int, ...]:
        return self.trajectory[self.entry_index : -1]

    @property
    def total_stopping_time(self) -> int:
        return self.entry_index

    @property
    def stopping_time(self) -> int | None:
        for k in range(1, len(self.trajectory)):
            if self.trajectory[k] < self.start:
                return k
        return None


@dataclass(frozen=True)
class Cycle:
    """A periodic orbit rotated so its minimum comes first.

    sign_pattern marks each member '+' for prime, '-' for composite.
    """

    members: tuple[int, ...]
    shift: Shift
    sign_pattern: str

    def __len__(self) -> int:
        return len(self.members)


def default_max_steps(n: int, a: int) -> int:
    """Generous step budget; real orbits are far shorter."""
    return 10 * (int(math.log2(max(n, 2))) + 1) + 4 * a + 100


def _step_fn(shift, table, use_beta, extend_domain):
    fn = shifted_beta if use_beta else shifted_B
    return lambda v: fn(v, shift, table, extend_domain=extend_domain)


def brent_cycle(step, x0: int, max_steps: int) -> tuple[int, int]:
    """Brent's algorithm: return (cycle_length, entry_index) for x0 under step.

    Uses O(1) memory; values are recomputed rather than stored.
    """
    power = lam = 1
    tortoise = x0
    hare = step(x0)
    steps = 1
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare)
        lam += 1
        steps += 1
        if steps > max_steps:
            raise NonterminationError(x0, "?", max_steps)
    tortoise = hare = x0
    for _ in range(lam):
        hare = step(hare)
    mu = 0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        mu += 1
        if mu > max_steps:
            raise NonterminationError(x0, "?", max_steps)
    return lam, mu


def iterate_orbit(
    n: int,
    shift: Shift | int,
    table: SieveTable,
    max_steps: int | None = None,
    memory_capped: bool = False,
    use_beta: bool = False,
    extend_domain: bool = False,
) -> OrbitRecord:
    """Follow n under the shifted map until the orbit closes."""
    shift = as_shift(shift)
    if max_steps is None:
        max_steps = default_max_steps(n, shift.a)
    step = _step_fn(shift, table, use_beta, extend_domain)

    if memory_capped:
        lam, mu = brent_cycle(step, n, max_steps)
        traj = [n]
        v = n
        for _ in range(mu + lam):
            v = step(v)
            traj.append(v)
        return OrbitRecord(n, shift, tuple(traj), mu)

    seen: dict[int, int] = {}
    traj = [n]
    v = n
    while v not in seen:
        seen[v] = len(traj) - 1
        if len(traj) - 1 >= max_steps:
            raise NonterminationError(n, shift.a, max_steps)
        v = step(v)
        traj.append(v)
    return OrbitRecord(n, shift, tuple(traj), seen[v])


def stopping_time(
    n: int,
    shift: Shift | int,
    table: SieveTable,
    max_steps: int | None = None,
    use_beta: bool = False,
) -> int | None:
    """Least k with B_a^k(n) < n, or None if the orbit cycles above n.

    None is a legitimate outcome (infimum over an empty set), e.g. for
    cycle minima and for every n < 5.
    """
    shift = as_shift(shift)
    if max_steps is None:
        max_steps = default_max_steps(n, shift.a)
    step = _step_fn(shift, table, use_beta, False)
    seen = {n}
    v = n
    for k in range(1, max_steps + 1):
        v = step(v)
        if v < n:
            return k
        if v in seen:
            return None
        seen.add(v)
    raise NonterminationError(n, shift.a, max_steps)


def total_stopping_time(
    n: int, shift: Shift | int, table: SieveTable, **kwargs
) -> int:
    """Number of iterations before the orbit of n enters its cycle."""
    return iterate_orbit(n, shift, table, **kwargs).total_stopping_time


def canonicalize(
    raw_cycle, shift: Shift | int, table: SieveTable, use_beta: bool = False
) -> Cycle:
    """Rotate a verified cycle so its minimum is first and attach signs."""
    shift = as_shift(shift)
    members = [int(v) for v in raw_cycle]
    if not members:
        raise ConsistencyError("empty cycle")
    step = _step_fn(shift, table, use_beta, False)
    for v, nxt in zip(members, members[1:] + members[:1]):
        got = step(v)
        if got != nxt:
            raise ConsistencyError(
                f"not a cycle under a={shift.a}: {v} -> {got}, expected {nxt}"
            )
    k = members.index(min(members))
    rotated = tuple(members[k:] + members[:k])
    pattern = "".join("+" if is_prime(v, table) else "-" for v in rotated)
    return Cycle(rotated, shift, pattern)


def sign_patterns_of_length(k: int, census) -> set[str]:
    """Distinct sign patterns among the length-k cycles of a census report.

    Accepts a single CensusReport or an iterable of them.
    """
    reports = [census] if hasattr(census, "cycles") else list(census)
    out = set()
    for rep in reports:
        for cyc in rep.cycles:
            if len(cyc) == k:
                out.add(cyc.sign_pattern)
    return out
