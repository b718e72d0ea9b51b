"""Substitutions as association lists.

A `Subst` is an ordered list of bindings.  Lookup returns the first binding
for a key, so ``{x -> A; x -> B}`` behaves like ``{x -> A}``, and a trivial
binding ``{x -> x}`` behaves like the empty substitution.  The data type is
not quotiented by these identifications: two structurally different binding
lists may denote the same substitution, and `subst_equal` is the semantic
equality.  `canonicalize` picks a unique representative of each class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .terms import Comb, Const, Term, Var, vars_of
from .varset import EMPTY, VarSet


@dataclass(frozen=True, slots=True)
class Binding:
    key: str
    value: Term


@dataclass(frozen=True, slots=True)
class Subst:
    bindings: tuple[Binding, ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, Term]]) -> Subst:
        return cls(tuple(Binding(k, v) for k, v in pairs))

    def __iter__(self) -> Iterator[Binding]:
        return iter(self.bindings)

    def __len__(self) -> int:
        return len(self.bindings)

    def __repr__(self) -> str:
        inner = "; ".join(f"{b.key} -> {b.value!r}" for b in self.bindings)
        return "Subst{" + inner + "}"

    def lookup_table(self) -> dict[str, Term]:
        """First-match view of the bindings, one entry per key."""
        table: dict[str, Term] = {}
        for b in self.bindings:
            table.setdefault(b.key, b.value)
        return table


ANIL = Subst()


def acons(key: str, value: Term, s: Subst) -> Subst:
    return Subst((Binding(key, value),) + s.bindings)


def assoc(default: Term, key: str, s: Subst) -> Term:
    for b in s.bindings:
        if b.key == key:
            return b.value
    return default


def _apply(t: Term, table: dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return table.get(t.name, t)
    if isinstance(t, Comb):
        left = _apply(t.left, table)
        right = _apply(t.right, table)
        if left is t.left and right is t.right:
            return t
        return Comb(left, right)
    return t


def apply_subst(t: Term, s: Subst) -> Term:
    if not s.bindings:
        return t
    return _apply(t, s.lookup_table())


def compose(r: Subst, s: Subst) -> Subst:
    """``r`` then ``s``: maps `s` over the values of `r`, then appends `s`.

    Shadowed keys of `s` are kept; use `canonicalize` to tidy the result.
    """
    if not s.bindings:
        return r
    table = s.lookup_table()
    head = tuple(Binding(b.key, _apply(b.value, table)) for b in r.bindings)
    return Subst(head + s.bindings)


def domain(s: Subst) -> VarSet:
    """Variables actually moved by `s`."""
    return VarSet(k for k, v in s.lookup_table().items() if v != Var(k))


def range_vars(s: Subst) -> VarSet:
    table = s.lookup_table()
    out = EMPTY
    for k in domain(s):
        out = out | vars_of(table[k])
    return out


def subst_equal(s1: Subst, s2: Subst) -> bool:
    t1, t2 = s1.lookup_table(), s2.lookup_table()
    for k in t1.keys() | t2.keys():
        if t1.get(k, Var(k)) != t2.get(k, Var(k)):
            return False
    return True


def canonicalize(s: Subst) -> Subst:
    """One binding per moved variable, sorted by variable name."""
    table = s.lookup_table()
    return Subst(
        tuple(Binding(k, table[k]) for k in sorted(table) if table[k] != Var(k))
    )


def is_idempotent(s: Subst) -> bool:
    return subst_equal(compose(s, s), s)


def is_ground(t: Term) -> bool:
    return isinstance(t, Const) or (
        isinstance(t, Comb) and is_ground(t.left) and is_ground(t.right)
    )
