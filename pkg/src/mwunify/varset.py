"""Finite sets of variable names with extensional equality."""

from __future__ import annotations

from typing import Iterable, Iterator


class VarSet:
    """Immutable finite set of variable names.

    Equality is extensional: order and multiplicity of construction do not
    matter.  Iteration follows the lexicographic order on names.
    """

    __slots__ = ("_members",)

    def __init__(self, members: Iterable[str] = ()) -> None:
        self._members = frozenset(members)

    def member(self, x: str) -> bool:
        return x in self._members

    def union(self, other: VarSet) -> VarSet:
        return VarSet(self._members | other._members)

    def insert(self, x: str) -> VarSet:
        return VarSet(self._members | {x})

    def card(self) -> int:
        return len(self._members)

    def is_subset(self, other: VarSet) -> bool:
        return self._members <= other._members

    def is_proper_subset(self, other: VarSet) -> bool:
        return self.is_subset(other) and self.card() < other.card()

    def intersection(self, other: VarSet) -> VarSet:
        return VarSet(self._members & other._members)

    __or__ = union
    __and__ = intersection
    __le__ = is_subset
    __lt__ = is_proper_subset

    def __contains__(self, x: object) -> bool:
        return x in self._members

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._members))

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VarSet):
            return NotImplemented
        return self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return "{" + ", ".join(self) + "}"


EMPTY = VarSet()


def member(x: str, a: VarSet) -> bool:
    return a.member(x)


def union(a: VarSet, b: VarSet) -> VarSet:
    return a.union(b)


def card(a: VarSet) -> int:
    return a.card()


def is_proper_subset(a: VarSet, b: VarSet) -> bool:
    return a.is_proper_subset(b)


def insert(x: str, a: VarSet) -> VarSet:
    return a.insert(x)
