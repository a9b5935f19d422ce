import pytest

from primeshift import (
    ConsistencyError,
    Shift,
    brent_cycle,
    canonicalize,
    iterate_orbit,
    run_census,
    shifted_B,
    sign_patterns_of_length,
    stopping_time,
    total_stopping_time,
)


def test_orbit_cycle_examples(table):
    rec = iterate_orbit(5, 2, table)
    assert rec.trajectory == (5, 7, 9, 6, 5)
    assert rec.cycle == (5, 7, 9, 6)
    assert rec.entry_index == 0

    rec = iterate_orbit(4, 7, table)
    assert rec.cycle == (4,)
    assert rec.total_stopping_time == 0


def test_orbit_descends_to_5_6(table):
    rec = iterate_orbit(100, 1, table)
    assert set(rec.cycle) == {5, 6}
    # trajectory agrees with direct scalar iteration
    for i in range(len(rec.trajectory) - 1):
        assert rec.trajectory[i + 1] == shifted_B(rec.trajectory[i], 1, table)


def test_orbit_extended_domain(table):
    rec = iterate_orbit(1, 5, table, extend_domain=True)
    assert rec.cycle == (1,)


def test_memory_capped_matches_default(table):
    for n in (5, 100, 9973, 720720 % 10**5):
        a = 17
        rec = iterate_orbit(n, a, table)
        capped = iterate_orbit(n, a, table, memory_capped=True)
        assert capped.trajectory == rec.trajectory
        assert capped.entry_index == rec.entry_index


def test_brent_direct():
    # x -> x+1 mod 10 starting from 3: pure cycle of length 10
    lam, mu = brent_cycle(lambda x: (x + 1) % 10, 3, 100)
    assert (lam, mu) == (10, 0)
    # tail of length 3 into a 2-cycle
    f = {0: 1, 1: 2, 2: 3, 3: 4, 4: 3}
    lam, mu = brent_cycle(lambda x: f[x], 0, 100)
    assert (lam, mu) == (2, 3)


def test_stopping_times(table):
    assert stopping_time(7, 1, table) == 2
    assert stopping_time(9, 1, table) == 1
    assert stopping_time(5, 1, table) is None  # cycle minimum never drops
    assert stopping_time(4, 9, table) is None
    assert total_stopping_time(5, 2, table) == 0
    assert total_stopping_time(100, 1, table) == len(
        iterate_orbit(100, 1, table).trajectory
    ) - 1 - 2  # tail length: cycle (5,6) occupies the last two steps


def test_canonicalize(table):
    cyc = canonicalize((7, 9, 6, 5), Shift(2), table)
    assert cyc.members == (5, 7, 9, 6)
    assert cyc.sign_pattern == "++--"

    cyc = canonicalize((4,), Shift(11), table)
    assert cyc.members == (4,)
    assert cyc.sign_pattern == "-"

    cyc = canonicalize((10, 7), Shift(3), table)
    assert cyc.members == (7, 10)
    assert cyc.sign_pattern == "+-"


def test_canonicalize_rejects_non_cycle(table):
    with pytest.raises(ConsistencyError):
        canonicalize((5, 6), Shift(2), table)


def test_sign_patterns(table, vt):
    reports = [
        run_census(a, 10**5, table, vt, compute_stopping=False)
        for a in range(1, 41)
    ]
    # only the fixed point (4) has length 1, and it is composite
    assert sign_patterns_of_length(1, reports) == {"-"}
    # k = 3: small shifts only realize one interior sign choice; the other
    # first appears at a = 194 with the cycle (17, 211, 405)
    assert sign_patterns_of_length(3, reports) == {"+--"}
    far = run_census(194, 10**5, table, vt, compute_stopping=False)
    assert "++-" in sign_patterns_of_length(3, [far])
    # a = 39 contributes the 2-cycle (43, 82)
    assert "+-" in sign_patterns_of_length(2, reports[38:39])
    # every longer cycle starts prime and ends composite in canonical form
    for rep in reports:
        for cyc in rep.cycles:
            if len(cyc) > 2:
                assert cyc.sign_pattern[0] == "+"
                assert cyc.sign_pattern[-1] == "-"


def test_nontrivial_cycle_minimum_is_prime(table, vt):
    for a in range(1, 31):
        rep = run_census(a, 10**5, table, vt, compute_stopping=False)
        for cyc in rep.nontrivial_cycles:
            assert cyc.sign_pattern[0] == "+"
