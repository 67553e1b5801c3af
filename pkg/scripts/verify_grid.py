"""Run the cyclic oracle over a grid of (m, r) and print a match summary.

    python3 scripts/verify_grid.py --max-dim 5 --max-degree 4 --extra 3
"""
import argparse
import time

from tricover.analyzer import ParityError
from tricover.oracle import build_cover, genus_check, verify_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-dim", type=int, default=5)
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--extra", type=int, default=3, help="max_total = m + extra")
    ap.add_argument("--coeffs", choices=["distinct", "random"], default="distinct")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    bad = 0
    print(f"{'m':>2} {'r':>2} {'d':>3} {'pairs':>5} {'genus':>5} {'match':>5} {'sec':>6}")
    for m in range(2, args.max_dim + 1):
        for r in range(1, args.max_degree + 1):
            try:
                cov = build_cover(m, r, args.coeffs, args.seed)
            except ParityError:
                continue
            t0 = time.perf_counter()
            reps = verify_grid(cov, m + args.extra)
            ok = all(x.match for x in reps)
            g = genus_check(cov)
            bad += not (ok and g)
            print(f"{m:>2} {r:>2} {cov.d:>3} {len(reps):>5} {str(g):>5} {str(ok):>5} "
                  f"{time.perf_counter() - t0:6.2f}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
