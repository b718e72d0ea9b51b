"""Smallest sufficient fuel for the bounded unifier, against the default bound.

For every corpus pair finds the least fuel at which `unify_bounded` stops
returning OUT_OF_FUEL, and reports the worst ratio to 2 * (size t + size u).
"""

import argparse
import random

from mwunify.sweep import random_pairs
from mwunify.terms import term_size
from mwunify.unify import OutOfFuel, default_fuel, unify_bounded
from mwunify.verification import Universe, enumerate_terms


def least_fuel(t, u) -> int:
    fuel = 0
    while isinstance(unify_bounded(t, u, fuel), OutOfFuel):
        fuel += 1
    return fuel


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=2)
    ap.add_argument("--random", type=int, default=2000)
    ap.add_argument("--random-depth", type=int, default=6)
    args = ap.parse_args()

    uni = Universe.sized(2, 2, args.depth)
    terms = enumerate_terms(uni)
    pairs = [(t, u) for t in terms for u in terms]
    pairs += random_pairs(random.Random(0), uni, args.random, args.random_depth)
    worst, worst_pair = 0.0, None
    for t, u in pairs:
        ratio = least_fuel(t, u) / default_fuel(t, u)
        if ratio > worst:
            worst, worst_pair = ratio, (t, u)
    t, u = worst_pair
    print(f"pairs: {len(pairs)}")
    print(f"worst needed/default fuel: {worst:.3f} at sizes {term_size(t)}, {term_size(u)}")


if __name__ == "__main__":
    main()
