"""Unification with the occurs check, as a total function on finite terms.

The algorithm unifies the left sons first, applies that unifier to the right
sons, unifies those, and composes the two results.  No triangular
substitutions or union-find: the recursion is kept in its textbook form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .measure import cardv, check_head_ordering, lexicographic_decrease, tail_ordering_holds
from .subst import ANIL, Subst, apply_subst, compose
from .terms import Comb, Const, Term, Var, occs, term_size


@dataclass(frozen=True, slots=True)
class Failure:
    def __repr__(self) -> str:
        return "FAILURE"


@dataclass(frozen=True, slots=True)
class Success:
    subst: Subst

    def __repr__(self) -> str:
        return f"SUCCESS({self.subst!r})"


@dataclass(frozen=True, slots=True)
class OutOfFuel:
    def __repr__(self) -> str:
        return "OUT_OF_FUEL"


FAILURE = Failure()
OUT_OF_FUEL = OutOfFuel()

Attempt = Union[Failure, Success]
BoundedAttempt = Union[Failure, Success, OutOfFuel]


class Call(enum.Enum):
    HEAD = "head-call"
    TAIL = "tail-call"


@dataclass(frozen=True)
class TraceEvent:
    """One recursive call made while unifying two combinations.

    `head_subst` is the unifier of the left sons for a tail call (the
    substitution applied to the right sons), and None for a head call.
    """

    caller: tuple[Term, Term]
    callee: tuple[Term, Term]
    which: Call
    cardv_caller: int
    cardv_callee: int
    head_subst: Optional[Subst] = None

    def sons(self) -> tuple[Term, Term, Term, Term]:
        t, u = self.caller
        assert isinstance(t, Comb) and isinstance(u, Comb)
        return t.left, t.right, u.left, u.right

    def ordering_ok(self) -> bool:
        """Head/tail ordering formula for this event plus lexicographic decrease."""
        t1, t2, u1, u2 = self.sons()
        if self.which is Call.HEAD:
            ordered = check_head_ordering(t1, t2, u1, u2)
        else:
            assert self.head_subst is not None
            ordered = tail_ordering_holds(self.head_subst, t1, t2, u1, u2)
        return ordered and lexicographic_decrease(self.caller, self.callee)


class TerminationMeasureError(AssertionError):
    """A recursive call failed to decrease the termination measure."""


def attempt_then(
    z: Attempt, on_fail: Attempt, on_success: Callable[[Subst], Attempt]
) -> Attempt:
    if isinstance(z, Success):
        return on_success(z.subst)
    return on_fail


def assign(v: str, t: Term) -> Attempt:
    if occs(Var(v), t):
        return FAILURE
    return Success(Subst.of([(v, t)]))


def _leaf_case(t: Term, u: Term) -> Optional[Attempt]:
    """Every case except combination against combination; None for that one."""
    if isinstance(t, Var):
        return assign(t.name, u)
    if isinstance(t, Const):
        if isinstance(u, Const):
            return Success(ANIL) if t.name == u.name else FAILURE
        if isinstance(u, Var):
            return assign(u.name, t)
        return FAILURE
    if isinstance(u, Const):
        return FAILURE
    if isinstance(u, Var):
        return assign(u.name, t)
    return None


def unify(t: Term, u: Term) -> Attempt:
    leaf = _leaf_case(t, u)
    if leaf is not None:
        return leaf
    assert isinstance(t, Comb) and isinstance(u, Comb)
    return attempt_then(
        unify(t.left, u.left),
        FAILURE,
        lambda s1: attempt_then(
            unify(apply_subst(t.right, s1), apply_subst(u.right, s1)),
            FAILURE,
            lambda s2: Success(compose(s1, s2)),
        ),
    )


def unify_bounded(t: Term, u: Term, fuel: int) -> BoundedAttempt:
    """`unify` with a recursion bound: every recursive call receives ``fuel - 1``.

    A call that would need to recurse with no fuel left yields OUT_OF_FUEL.
    """
    leaf = _leaf_case(t, u)
    if leaf is not None:
        return leaf
    if fuel <= 0:
        return OUT_OF_FUEL
    assert isinstance(t, Comb) and isinstance(u, Comb)
    head = unify_bounded(t.left, u.left, fuel - 1)
    if not isinstance(head, Success):
        return head
    s1 = head.subst
    tail = unify_bounded(apply_subst(t.right, s1), apply_subst(u.right, s1), fuel - 1)
    if not isinstance(tail, Success):
        return tail
    return Success(compose(s1, tail.subst))


def default_fuel(t: Term, u: Term) -> int:
    return 2 * (term_size(t) + term_size(u))


def unify_traced(
    t: Term, u: Term, *, strict: bool = True
) -> tuple[Attempt, list[TraceEvent]]:
    """`unify`, also returning one event per recursive call in call order.

    With `strict`, an event that breaks the ordering propositions raises
    TerminationMeasureError instead of being silently recorded.
    """
    trace: list[TraceEvent] = []

    def record(event: TraceEvent) -> None:
        if strict and not event.ordering_ok():
            raise TerminationMeasureError(f"measure does not decrease: {event}")
        trace.append(event)

    def go(t: Term, u: Term) -> Attempt:
        leaf = _leaf_case(t, u)
        if leaf is not None:
            return leaf
        assert isinstance(t, Comb) and isinstance(u, Comb)
        outer = cardv(t, u)
        head_args = (t.left, u.left)
        record(TraceEvent((t, u), head_args, Call.HEAD, outer, cardv(*head_args)))
        head = go(*head_args)
        if not isinstance(head, Success):
            return FAILURE
        s1 = head.subst
        tail_args = (apply_subst(t.right, s1), apply_subst(u.right, s1))
        record(TraceEvent((t, u), tail_args, Call.TAIL, outer, cardv(*tail_args), s1))
        tail = go(*tail_args)
        if not isinstance(tail, Success):
            return FAILURE
        return Success(compose(s1, tail.subst))

    return go(t, u), trace
