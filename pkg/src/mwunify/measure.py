"""The termination measure of unification and its ordering propositions.

The measure is the number of distinct variables in a pair of terms.  Each
recursive call either lowers it or keeps it while the first argument shrinks
to an immediate subterm, which gives a lexicographic decrease.
"""

from __future__ import annotations

from .subst import Subst, apply_subst
from .terms import Comb, Term, vars_of


def cardv(t: Term, u: Term) -> int:
    return (vars_of(t) | vars_of(u)).card()


def check_head_ordering(t1: Term, t2: Term, u1: Term, u2: Term) -> bool:
    whole = cardv(Comb(t1, t2), Comb(u1, u2))
    head = cardv(t1, u1)
    return head == whole or head < whole


def tail_ordering_holds(s: Subst, t1: Term, t2: Term, u1: Term, u2: Term) -> bool:
    """The tail ordering formula alone, without its best-unifier premise."""
    whole = cardv(Comb(t1, t2), Comb(u1, u2))
    t2s, u2s = apply_subst(t2, s), apply_subst(u2, s)
    unchanged = t2s == t2 and cardv(t2, u2s) == whole
    return unchanged or cardv(t2s, u2s) < whole


def lexicographic_decrease(
    caller: tuple[Term, Term], callee: tuple[Term, Term]
) -> bool:
    before, after = cardv(*caller), cardv(*callee)
    if after < before:
        return True
    head = caller[0]
    return (
        after == before
        and isinstance(head, Comb)
        and callee[0] in (head.left, head.right)
    )
