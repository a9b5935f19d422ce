import json
import random

import pytest

from primeshift import (
    DomainError,
    Shift,
    census_to_csv,
    census_to_json,
    climb_margin,
    cycle_count_sweep,
    iterate_orbit,
    run_census,
    run_census_naive,
)
from primeshift.golden import A39_CYCLES, CYCLE_TABLE, canonical_set


def test_census_a1(table, vt):
    rep = run_census(1, 10**6, table, vt)
    assert rep.nontrivial_member_sets() == {(5, 6)}
    assert [c.members for c in rep.trivial_cycles] == [(4,)]


def test_census_a12(table, vt):
    rep = run_census(12, 10**6, table, vt, compute_stopping=False)
    assert rep.nontrivial_member_sets() == {(5, 17, 29, 41, 53, 65, 18, 8, 6)}


def test_census_a39(table, vt):
    rep = run_census(39, 10**6, table, vt, compute_stopping=False)
    assert rep.nontrivial_member_sets() == canonical_set(A39_CYCLES)


def test_basin_counts_sum(table, vt):
    rep = run_census(3, 10**4, table, vt)
    assert sum(rep.basin_counts.values()) == 10**4 - 1
    assert sum(rep.stopping_time_histogram.values()) == 10**4 - 1


def test_naive_agrees_with_memoized(table, vt):
    for a in range(1, 6):
        fast = run_census(a, 10**4, table, vt)
        slow = run_census_naive(a, 10**4, table)
        assert {c.members for c in fast.cycles} == {c.members for c in slow.cycles}
        assert {c.members: n for c, n in fast.basin_counts.items()} == {
            c.members: n for c, n in slow.basin_counts.items()
        }
        assert fast.stopping_time_histogram == slow.stopping_time_histogram
        assert fast.max_total_stopping_time == slow.max_total_stopping_time


def test_order_independence(table):
    starts = list(range(2, 2001))
    shuffled = starts[:]
    random.Random(7).shuffle(shuffled)
    a_order = run_census_naive(7, 2000, table, order=starts)
    b_order = run_census_naive(7, 2000, table, order=shuffled)
    assert {c.members for c in a_order.cycles} == {c.members for c in b_order.cycles}
    assert {c.members: n for c, n in a_order.basin_counts.items()} == {
        c.members: n for c, n in b_order.basin_counts.items()
    }


def test_fate_matches_orbit_tail(table, vt):
    rep = run_census(5, 10**4, table, vt)
    member_sets = {c.members: set(c.members) for c in rep.cycles}
    for n in (2, 17, 100, 5040, 9973):
        rec = iterate_orbit(n, 5, table)
        landing = rec.trajectory[rec.total_stopping_time]
        assert any(landing in s for s in member_sets.values())


def test_census_requires_covering_table(table):
    with pytest.raises(DomainError):
        run_census(1, table.limit + 1, table)


def test_climb_margin():
    assert climb_margin(0) == 0
    # a=1: smallest prime not dividing 1 is 2 -> margin 3
    assert climb_margin(1) == 3
    # a=6: 2 and 3 divide, 5 does not -> margin 36
    assert climb_margin(6) == 36


def test_table1_rows_match_catalog(table, vt):
    # The 17 internally consistent catalog rows reproduce exactly at 10^6.
    for a, rows in CYCLE_TABLE.items():
        if a in (9, 11, 13):
            continue
        rep = run_census(a, 10**6, table, vt, compute_stopping=False)
        assert rep.nontrivial_member_sets() == canonical_set(rows), f"a={a}"


def test_sweep_counts(table, vt):
    counts, argmax = cycle_count_sweep(20, 10**6, table, vt)
    assert counts[1] == 1
    assert counts[17] == 2
    for a, rows in CYCLE_TABLE.items():
        if a in (9, 11, 13):
            continue
        assert counts[a] == len(rows), f"a={a}"


def test_sweep_parallel_matches_serial(table, vt):
    serial, argmax_s = cycle_count_sweep(8, 10**5, table, vt)
    parallel, argmax_p = cycle_count_sweep(8, 10**5, table, threads=2)
    assert serial == parallel
    assert argmax_s == argmax_p


def test_csv_output(table, vt):
    rep = run_census(3, 10**4, table, vt)
    text = census_to_csv(rep)
    lines = text.splitlines()
    assert lines[0] == "a,cycle_id,length,members,sign_pattern,basin_count"
    assert len(lines) == 1 + len(rep.cycles)
    row = dict(zip(lines[0].split(","), lines[2].split(",")))
    assert row["a"] == "3"
    members = tuple(int(v) for v in row["members"].split(";"))
    assert members in {c.members for c in rep.cycles}


def test_json_output(table, vt):
    rep = run_census(3, 10**4, table, vt)
    payload = json.loads(census_to_json(rep))
    assert payload["schema_version"] == 1
    assert payload["a"] == 3
    cycles = {tuple(c["members"]) for c in payload["cycles"]}
    assert (5, 8, 6) in cycles and (7, 10) in cycles
    assert sum(c["basin_count"] for c in payload["cycles"]) == 10**4 - 1
