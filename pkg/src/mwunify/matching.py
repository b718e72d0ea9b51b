"""One-sided matching, and with it a decision procedure for "more general".

`more_gen(s1, s2)` asks for a witness ``r`` with ``s2 = s1 then r``.  Outside
``D = domain(s1) | domain(s2)`` both substitutions are the identity, so ``r``
must be the identity there too.  Inside ``D`` the requirement is exactly the
matching problem ``r(s1(v)) = s2(v)``.  A match binds only pattern variables
and every such binding is forced, so if the match puts a non-identity value
on a variable outside ``D`` no witness exists at all.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .subst import Subst, apply_subst, canonicalize, compose, domain, subst_equal
from .terms import Comb, Term, Var

MatchProblem = Sequence[tuple[Term, Term]]


def match_terms(problem: Iterable[tuple[Term, Term]]) -> Optional[Subst]:
    """Find ``r`` with ``apply_subst(pattern, r) == target`` for every pair.

    Targets are rigid.  Returns the bindings sorted by variable name (trivial
    ``v -> v`` bindings included), or None when no such ``r`` exists.
    """
    bound: dict[str, Term] = {}
    stack = list(problem)
    while stack:
        pattern, target = stack.pop()
        if isinstance(pattern, Var):
            seen = bound.get(pattern.name)
            if seen is None:
                bound[pattern.name] = target
            elif seen != target:
                return None
        elif isinstance(pattern, Comb):
            if not isinstance(target, Comb):
                return None
            stack.append((pattern.right, target.right))
            stack.append((pattern.left, target.left))
        elif pattern != target:
            return None
    return Subst.of(sorted(bound.items()))


def more_gen(s1: Subst, s2: Subst) -> Optional[Subst]:
    """Witness ``r`` (canonical) with ``s2 ~ compose(s1, r)``, or None."""
    dom = domain(s1) | domain(s2)
    pairs = [(apply_subst(Var(v), s1), apply_subst(Var(v), s2)) for v in dom]
    r = match_terms(pairs)
    if r is None:
        return None
    for b in r:
        if b.key not in dom and b.value != Var(b.key):
            return None
    r = canonicalize(r)
    assert subst_equal(s2, compose(s1, r)), (s1, s2, r)
    return r
