"""Track the growth of the prime-partition count kappa(m).

Prints kappa at powers of 10 together with the normalized log ratio
log kappa(m) / (2 pi sqrt(m / (3 log m))), which drifts toward 1.

Usage: python3 scripts/kappa_growth.py [--limit 10000]
"""

import argparse

from primeshift import build_kappa, build_sieve, build_value_table, kappa_asymptotic_ratio


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=10**4)
    args = ap.parse_args()

    table = build_sieve(max(args.limit, 100))
    vt = build_value_table(table)
    kt = build_kappa(args.limit, table, vt)

    print(f"{'m':>8} {'digits':>7} {'ratio':>8}")
    m = 10
    while m <= args.limit:
        r = kappa_asymptotic_ratio(m, kt)
        print(f"{m:>8} {len(str(kt[m])):>7} {r:>8.4f}")
        m *= 10


if __name__ == "__main__":
    main()
