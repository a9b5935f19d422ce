"""Recompute the a=1..20 cycle catalog and diff it against the bundled copy.

Usage: python3 scripts/reproduce_cycle_table.py [--limit 1000000]
"""

import argparse

from primeshift import build_sieve, build_value_table, run_census
from primeshift.census import climb_margin
from primeshift.golden import CYCLE_TABLE, KNOWN_BAD_ROWS, canonical_set


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=10**6, help="largest starting value")
    args = ap.parse_args()

    margin = max(climb_margin(a) for a in CYCLE_TABLE)
    table = build_sieve(args.limit + margin)
    vt = build_value_table(table)

    matches = 0
    for a in sorted(CYCLE_TABLE):
        rep = run_census(a, args.limit, table, vt, compute_stopping=False)
        got = rep.nontrivial_member_sets()
        want = canonical_set(CYCLE_TABLE[a])
        mark = "ok" if got == want else "DIFF"
        if got == want:
            matches += 1
        print(f"a={a:>2} {mark:>4}  computed={sorted(got)}")
        if got != want:
            note = " (catalog row not closed under the map)" if a in KNOWN_BAD_ROWS else ""
            print(f"          catalog={sorted(want)}{note}")
    print(f"\nMATCH: {matches}/{len(CYCLE_TABLE)} rows")


if __name__ == "__main__":
    main()
