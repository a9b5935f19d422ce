"""Whole-range cycle censuses: every start up to a limit, one shift at a time.

The fast path treats B_a restricted to [2, limit] as a functional graph
held in one flat array and resolves every start's fate with vectorized
pointer doubling, so a full 10^6-start census takes a fraction of a
second.  A deliberately naive per-start iterator is kept alongside as a
cross-check.
"""

from __future__ import annotations

import concurrent.futures
import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .arith import Shift, as_shift, shifted_B
from .dynamics import Cycle, canonicalize, default_max_steps, iterate_orbit
from .errors import ConsistencyError, DomainError
from .sieve import SieveTable, build_sieve, is_prime
from .tables import ValueTable, build_value_table, step_map

SCHEMA_VERSION = 1


def climb_margin(a: int) -> int:
    """Headroom above the start range that iterates can reach.

    From a prime p the orbit climbs p, p+a, ... until a term is divisible
    by the smallest prime s not dividing a (s exists within 2a), so no
    iterate exceeds start + (s+1)*a.
    """
    if a == 0:
        return 0
    s = 2
    while a % s == 0:
        s += 1
        while not is_prime(s):
            s += 1
    return (s + 1) * a


@dataclass
class CensusReport:
    """Catalog of every cycle reachable from starts 2..start_limit."""

    shift: Shift
    start_limit: int
    cycles: tuple[Cycle, ...]
    basin_counts: dict[Cycle, int] = field(repr=False)
    stopping_time_histogram: dict[int, int] = field(repr=False)
    max_total_stopping_time: int

    @property
    def trivial_cycles(self) -> tuple[Cycle, ...]:
        return tuple(c for c in self.cycles if len(c) == 1)

    @property
    def nontrivial_cycles(self) -> tuple[Cycle, ...]:
        return tuple(c for c in self.cycles if len(c) > 1)

    def nontrivial_member_sets(self) -> set[tuple[int, ...]]:
        return {c.members for c in self.nontrivial_cycles}


def _patch_escapes(f, w, shift, table):
    """Rewrite out-of-table edges as weighted shortcuts back into range."""
    limit = table.limit
    esc = np.nonzero(f > limit)[0]
    for n0 in esc.tolist():
        v = int(f[n0])
        steps = 1
        while v > limit:
            v = shifted_B(v, shift, table)
            steps += 1
        f[n0] = v
        w[n0] = steps
    return len(esc)


def _walk_cycle(f, start, max_steps):
    """Scalar-walk the array map from start until the orbit closes."""
    seen = {}
    path = []
    v = int(start)
    while v not in seen:
        if len(path) > max_steps:
            raise ConsistencyError(f"no cycle within {max_steps} steps from {start}")
        seen[v] = len(path)
        path.append(v)
        v = int(f[v])
    return path[seen[v] :]


def run_census(
    shift: Shift | int,
    start_limit: int,
    table: SieveTable,
    value_table: ValueTable | None = None,
    compute_stopping: bool = True,
) -> CensusReport:
    """Enumerate all cycles reached from starts 2..start_limit, with basins.

    Deterministic: cycles are listed by (minimum member, length) and every
    reported cycle is re-verified against the scalar map on insertion.
    """
    shift = as_shift(shift)
    if start_limit < 2:
        raise DomainError(f"start_limit must be >= 2, got {start_limit}")
    if table.limit < start_limit:
        raise DomainError(
            f"sieve limit {table.limit} is below start_limit {start_limit}"
        )
    vt = value_table if value_table is not None else build_value_table(table)
    limit = table.limit
    budget = default_max_steps(limit, shift.a)

    f = step_map(vt, shift)
    w = np.ones(limit + 1, dtype=np.int64)
    _patch_escapes(f, w, shift, table)

    # After T doublings F[n] = f^(2^T)(n); with 2^T >= any tail length every
    # entry lands on its cycle.  Correctness does not depend on T (a short
    # undershoot only produces extra representatives), T is purely a tuning.
    doublings = max(8, int(np.ceil(np.log2(budget))) + 1)
    F = f.copy()
    for _ in range(doublings):
        F = F[F]

    reps = np.unique(F[2:])
    cycle_of_rep: dict[int, int] = {}
    canon_index: dict[tuple[int, ...], int] = {}
    cycles_raw: list[tuple[int, ...]] = []
    for rep in reps.tolist():
        members = _walk_cycle(f, rep, budget)
        k = members.index(min(members))
        canon = tuple(members[k:] + members[:k])
        if canon not in canon_index:
            canon_index[canon] = len(cycles_raw)
            cycles_raw.append(canon)
        cycle_of_rep[rep] = canon_index[canon]

    rep_ids = np.array([cycle_of_rep[r] for r in reps.tolist()], dtype=np.int64)
    fate = rep_ids[np.searchsorted(reps, F[2 : start_limit + 1])]
    raw_basins = np.bincount(fate, minlength=len(cycles_raw))

    hist: dict[int, int] = {}
    max_tail = 0
    if compute_stopping:
        on_cycle = np.zeros(limit + 1, dtype=bool)
        for canon in cycles_raw:
            for v in canon:
                on_cycle[v] = True
        dist = np.where(on_cycle, 0, -1)
        dist[0] = dist[1] = 0
        pending = np.nonzero(dist < 0)[0]
        guard = 0
        while pending.size:
            tgt = f[pending]
            ready = dist[tgt] >= 0
            dist[pending[ready]] = dist[tgt[ready]] + w[pending[ready]]
            pending = pending[~ready]
            guard += 1
            if guard > budget:
                raise ConsistencyError("stopping-time resolution did not converge")
        tails = dist[2 : start_limit + 1]
        counts = np.bincount(tails)
        hist = {int(k): int(v) for k, v in enumerate(counts) if v}
        max_tail = int(tails.max()) if tails.size else 0

    # Re-verify and package, ordered by (minimum, length).
    order = sorted(range(len(cycles_raw)), key=lambda i: (cycles_raw[i][0], len(cycles_raw[i])))
    cycles = []
    basin_counts = {}
    for i in order:
        cyc = canonicalize(cycles_raw[i], shift, table)
        cycles.append(cyc)
        basin_counts[cyc] = int(raw_basins[i])
    return CensusReport(
        shift=shift,
        start_limit=start_limit,
        cycles=tuple(cycles),
        basin_counts=basin_counts,
        stopping_time_histogram=hist,
        max_total_stopping_time=max_tail,
    )


def run_census_naive(
    shift: Shift | int,
    start_limit: int,
    table: SieveTable,
    order=None,
) -> CensusReport:
    """Per-start reference census: no memoization, no vectorization.

    Slow by design; used to cross-check run_census on small ranges.  An
    explicit processing order may be supplied to confirm order-independence.
    """
    shift = as_shift(shift)
    starts = list(order) if order is not None else list(range(2, start_limit + 1))
    canon_cycles: dict[tuple[int, ...], Cycle] = {}
    basin_counts: dict[Cycle, int] = {}
    hist: dict[int, int] = {}
    max_tail = 0
    for n in starts:
        rec = iterate_orbit(n, shift, table)
        cyc = canonicalize(rec.cycle, shift, table)
        if cyc.members not in canon_cycles:
            canon_cycles[cyc.members] = cyc
            basin_counts[cyc] = 0
        basin_counts[canon_cycles[cyc.members]] += 1
        tail = rec.total_stopping_time
        hist[tail] = hist.get(tail, 0) + 1
        max_tail = max(max_tail, tail)
    cycles = tuple(
        sorted(canon_cycles.values(), key=lambda c: (c.members[0], len(c)))
    )
    return CensusReport(
        shift=shift,
        start_limit=start_limit,
        cycles=cycles,
        basin_counts=basin_counts,
        stopping_time_histogram=dict(sorted(hist.items())),
        max_total_stopping_time=max_tail,
    )


# ---------------------------------------------------------------------------
# Sweeps over many shifts


_WORKER_STATE: dict = {}


def _sweep_init(limit):
    table = build_sieve(limit)
    _WORKER_STATE["table"] = table
    _WORKER_STATE["vt"] = build_value_table(table)


def _sweep_one(args):
    a, start_limit = args
    rep = run_census(
        Shift(a),
        start_limit,
        _WORKER_STATE["table"],
        _WORKER_STATE["vt"],
        compute_stopping=False,
    )
    return a, len(rep.nontrivial_cycles)


def cycle_count_sweep(
    a_max: int,
    start_limit: int,
    table: SieveTable,
    value_table: ValueTable | None = None,
    threads: int = 1,
) -> tuple[dict[int, int], set[int]]:
    """Count distinct nontrivial cycles for each a in 1..a_max.

    Returns (counts, argmax_set).  With threads > 1 the shifts are farmed
    out to worker processes; the merge is by shift so output is identical
    either way.
    """
    if a_max < 1:
        raise DomainError(f"a_max must be >= 1, got {a_max}")
    counts: dict[int, int] = {}
    if threads > 1:
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=threads, initializer=_sweep_init, initargs=(table.limit,)
        ) as pool:
            for a, c in pool.map(
                _sweep_one, [(a, start_limit) for a in range(1, a_max + 1)],
                chunksize=4,
            ):
                counts[a] = c
    else:
        vt = value_table if value_table is not None else build_value_table(table)
        for a in range(1, a_max + 1):
            rep = run_census(Shift(a), start_limit, table, vt, compute_stopping=False)
            counts[a] = len(rep.nontrivial_cycles)
    best = max(counts.values())
    argmax = {a for a, c in counts.items() if c == best}
    return counts, argmax


# ---------------------------------------------------------------------------
# Serialization


def census_rows(report: CensusReport) -> list[dict]:
    rows = []
    for i, cyc in enumerate(report.cycles):
        rows.append(
            {
                "a": report.shift.a,
                "cycle_id": i,
                "length": len(cyc),
                "members": ";".join(str(v) for v in cyc.members),
                "sign_pattern": cyc.sign_pattern,
                "basin_count": report.basin_counts[cyc],
            }
        )
    return rows


CSV_COLUMNS = ["a", "cycle_id", "length", "members", "sign_pattern", "basin_count"]


def census_to_csv(reports) -> str:
    """CSV with one row per cycle; accepts one report or an iterable."""
    if isinstance(reports, CensusReport):
        reports = [reports]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        writer.writerows(census_rows(rep))
    return buf.getvalue()


def census_to_json(report: CensusReport) -> str:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "a": report.shift.a,
        "start_limit": report.start_limit,
        "cycles": [
            {
                "members": list(cyc.members),
                "sign_pattern": cyc.sign_pattern,
                "basin_count": report.basin_counts[cyc],
            }
            for cyc in report.cycles
        ],
        "stopping_time_histogram": {
            str(k): v for k, v in sorted(report.stopping_time_histogram.items())
        },
        "max_total_stopping_time": report.max_total_stopping_time,
    }
    return json.dumps(payload, indent=2, sort_keys=False)
