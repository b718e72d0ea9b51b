"""Run the full verification sweep over a universe and print the report.

    python scripts/corpus_sweep.py --consts 2 --vars 2 --depth 2 --random 1000
"""

import argparse
import time

from mwunify.sweep import run_sweep
from mwunify.verification import Universe


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--consts", type=int, default=2)
    ap.add_argument("--vars", type=int, default=2)
    ap.add_argument("--depth", type=int, default=2)
    ap.add_argument("--subst-depth", type=int, default=1)
    ap.add_argument("--random", type=int, default=0)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    uni = Universe.sized(args.consts, args.vars, args.depth, args.subst_depth)
    start = time.perf_counter()
    report = run_sweep(uni, seed=args.seed, n_random=args.random)
    for line in report.lines():
        print(line)
    print(f"violations: {report.total_violations()}  ({time.perf_counter() - start:.1f} s)")


if __name__ == "__main__":
    main()
