"""First-order terms as curried binary trees.

A term is a constant, a variable, or a combination of two terms.  An n-ary
application such as ``G[A; x]`` is written left-nested: ``Comb(Comb(G, A), x)``.
Constants and variables are told apart lexically: constant names start with an
uppercase letter, variable names with a lowercase one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .varset import VarSet

CONST_NAME = re.compile(r"[A-Z][A-Za-z0-9]*\Z")
VAR_NAME = re.compile(r"[a-z][A-Za-z0-9]*\Z")


def is_const_name(name: str) -> bool:
    return bool(CONST_NAME.match(name))


def is_var_name(name: str) -> bool:
    return bool(VAR_NAME.match(name))


@dataclass(frozen=True, slots=True)
class Const:
    name: str

    def __post_init__(self) -> None:
        if not is_const_name(self.name):
            raise ValueError(f"invalid constant name {self.name!r}")

    def __repr__(self) -> str:
        return f"Const({self.name})"


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self) -> None:
        if not is_var_name(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")

    def __repr__(self) -> str:
        return f"Var({self.name})"


@dataclass(frozen=True, slots=True)
class Comb:
    left: "Term"
    right: "Term"

    def __repr__(self) -> str:
        return f"Comb({self.left!r}, {self.right!r})"


Term = Union[Const, Var, Comb]


def occs(t: Term, u: Term) -> bool:
    """True iff `t` is a proper subterm of `u`."""
    if isinstance(u, Comb):
        return occs_eq(t, u.left) or occs_eq(t, u.right)
    return False


def occs_eq(t: Term, u: Term) -> bool:
    """Reflexive occurs-in: `t` equals `u` or occurs inside it."""
    return t == u or occs(t, u)


def vars_of(t: Term) -> VarSet:
    names: set[str] = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            names.add(node.name)
        elif isinstance(node, Comb):
            stack.append(node.left)
            stack.append(node.right)
    return VarSet(names)


def term_size(t: Term) -> int:
    if isinstance(t, Comb):
        return 1 + term_size(t.left) + term_size(t.right)
    return 1


def term_depth(t: Term) -> int:
    """Comb-nesting depth; leaves have depth 0."""
    if isinstance(t, Comb):
        return 1 + max(term_depth(t.left), term_depth(t.right))
    return 0


def subterms(t: Term) -> Iterator[Term]:
    """Every subterm of `t`, `t` itself first (preorder, duplicates kept)."""
    yield t
    if isinstance(t, Comb):
        yield from subterms(t.left)
        yield from subterms(t.right)


def proper_subterms(t: Term) -> set[Term]:
    if isinstance(t, Comb):
        return set(subterms(t.left)) | set(subterms(t.right))
    return set()
