"""Which corpus pairs make a tail call without lowering the variable count?

In those calls the tail ordering holds through its first disjunct: the
left-son unifier leaves the right son of the first term unchanged.  Prints
how often each disjunct carries the proposition, plus a few examples.
"""

import argparse
from collections import Counter

from mwunify.measure import cardv
from mwunify.subst import apply_subst
from mwunify.syntax import print_subst, print_term
from mwunify.unify import Call, unify_traced
from mwunify.verification import Universe, enumerate_terms


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=2)
    ap.add_argument("--examples", type=int, default=8)
    args = ap.parse_args()

    uni = Universe.sized(2, 2, args.depth)
    terms = enumerate_terms(uni)
    tally: Counter = Counter()
    shown = 0
    for t in terms:
        for u in terms:
            _, trace = unify_traced(t, u)
            for ev in trace:
                if ev.which is not Call.TAIL:
                    continue
                t1, t2, u1, u2 = ev.sons()
                s = ev.head_subst
                if cardv(apply_subst(t2, s), apply_subst(u2, s)) < ev.cardv_caller:
                    tally["strictly fewer variables"] += 1
                    continue
                tally["same count, right son unchanged"] += 1
                if shown < args.examples:
                    shown += 1
                    print(f"{print_term(t)} =? {print_term(u)}: tail call "
                          f"{print_term(ev.callee[0])} =? {print_term(ev.callee[1])} under {print_subst(s)}")
    for k, v in tally.most_common():
        print(f"{k}: {v}")


if __name__ == "__main__":
    main()
