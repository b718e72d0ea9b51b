"""Executable correctness predicates for unification over a finite universe.

The universal quantifiers of the correctness statement ("no substitution
unifies t and u", "every unifier is an instance of s") range here over a
finite set of substitutions: every map from the universe's variables to
terms of depth at most ``Universe.value_depth``.  Failure claims are therefore
checked against an under-approximation, and most-generality is checked
exactly against each enumerated unifier via `more_gen`.

`UniverseOracle` caches, for every term it sees, the vector of its images
under all enumerated substitutions (as interned ids), so "r unifies t and u"
for every r at once is one vector comparison.
"""

from __future__ import annotations

import itertools
import random
import string
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .matching import more_gen
from .measure import (  # noqa: F401  (re-exported)
    cardv,
    check_head_ordering,
    lexicographic_decrease,
    tail_ordering_holds,
)
from .subst import Subst, apply_subst, canonicalize, is_idempotent
from .terms import Comb, Const, Term, Var, is_const_name, is_var_name, subterms, vars_of
from .unify import Attempt, Failure, Success
from .varset import VarSet


class UniverseError(ValueError):
    """A term mentions variables the universe does not enumerate over."""


class PreconditionError(ValueError):
    """A conditional proposition was checked with its premise false."""


@dataclass(frozen=True)
class Universe:
    """Desk-scale enumeration domain.

    `max_depth` bounds the enumerated terms; `subst_depth` bounds the values
    of enumerated substitutions and defaults to `max_depth`.
    """

    constants: tuple[str, ...]
    variables: tuple[str, ...]
    max_depth: int
    subst_depth: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "constants", tuple(self.constants))
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.constants or not self.variables:
            raise ValueError("universe needs at least one constant and one variable")
        if self.max_depth < 0 or (self.subst_depth is not None and self.subst_depth < 0):
            raise ValueError("depths must be non-negative")
        for c in self.constants:
            if not is_const_name(c):
                raise ValueError(f"invalid constant name {c!r}")
        for v in self.variables:
            if not is_var_name(v):
                raise ValueError(f"invalid variable name {v!r}")

    @classmethod
    def sized(
        cls, n_consts: int, n_vars: int, depth: int, subst_depth: Optional[int] = None
    ) -> Universe:
        """Universe with constants A, B, ... and variables x, y, z, w, ..."""
        return cls(default_names(n_consts, string.ascii_uppercase, "C"),
                   default_names(n_vars, "xyzwvu", "x"),
                   depth, subst_depth)

    @property
    def value_depth(self) -> int:
        return self.max_depth if self.subst_depth is None else self.subst_depth

    @property
    def variable_set(self) -> VarSet:
        return VarSet(self.variables)


def default_names(n: int, alphabet: str, prefix: str) -> tuple[str, ...]:
    if n <= len(alphabet):
        return tuple(alphabet[:n])
    return tuple(f"{prefix}{i}" for i in range(n))


@lru_cache(maxsize=None)
def _terms_up_to(constants: tuple[str, ...], variables: tuple[str, ...], depth: int) -> tuple[Term, ...]:
    leaves = tuple(Const(c) for c in constants) + tuple(Var(v) for v in variables)
    if depth == 0:
        return leaves
    below = _terms_up_to(constants, variables, depth - 1)
    return leaves + tuple(Comb(a, b) for a in below for b in below)


def enumerate_terms(uni: Universe, depth: Optional[int] = None) -> list[Term]:
    """All terms over the universe of Comb-depth at most `depth` (default max_depth)."""
    return list(_terms_up_to(uni.constants, uni.variables, uni.max_depth if depth is None else depth))


def enumerate_substs(uni: Universe, depth: Optional[int] = None) -> list[Subst]:
    """Every map from the universe variables to terms of depth <= `depth`.

    Each result is canonical; mapping a variable to itself leaves it unbound.
    """
    values = enumerate_terms(uni, uni.value_depth if depth is None else depth)
    out = []
    for choice in itertools.product(values, repeat=len(uni.variables)):
        pairs = [(v, t) for v, t in zip(uni.variables, choice) if t != Var(v)]
        out.append(Subst.of(sorted(pairs)))
    return out


def unifies(s: Subst, t: Term, u: Term) -> bool:
    return apply_subst(t, s) == apply_subst(u, s)


class UniverseOracle:
    """Brute-force quantification over the enumerated substitutions of `uni`."""

    def __init__(self, uni: Universe) -> None:
        self.universe = uni
        self.substs = enumerate_substs(uni)
        self._tables = [s.lookup_table() for s in self.substs]
        self._allowed = uni.variable_set
        self._ids: dict[Term, int] = {}
        self._images: dict[Term, np.ndarray] = {}
        self._moregen: dict[Subst, np.ndarray] = {}

    def require(self, *terms: Term) -> None:
        for t in terms:
            if not vars_of(t) <= self._allowed:
                raise UniverseError(
                    f"variables {vars_of(t)!r} not within universe {self._allowed!r}"
                )

    def image_ids(self, t: Term) -> np.ndarray:
        cached = self._images.get(t)
        if cached is not None:
            return cached
        self.require(t)
        ids = self._ids
        if not vars_of(t):
            img = np.full(len(self.substs), ids.setdefault(t, len(ids)), dtype=np.int64)
        else:
            img = np.fromiter(
                (ids.setdefault(apply_subst(t, s), len(ids)) for s in self.substs),
                dtype=np.int64,
                count=len(self.substs),
            )
        self._images[t] = img
        return img

    def unifier_mask(self, t: Term, u: Term) -> np.ndarray:
        return self.image_ids(t) == self.image_ids(u)

    def unifiers(self, t: Term, u: Term) -> list[Subst]:
        return [self.substs[i] for i in np.flatnonzero(self.unifier_mask(t, u))]

    def moregen_mask(self, s: Subst) -> np.ndarray:
        """Which enumerated substitutions are instances of `s`."""
        key = canonicalize(s)
        mask = self._moregen.get(key)
        if mask is None:
            mask = np.fromiter(
                (more_gen(key, r) is not None for r in self.substs),
                dtype=bool,
                count=len(self.substs),
            )
            self._moregen[key] = mask
        return mask

    def cant_unify(self, t: Term, u: Term) -> bool:
        return not self.unifier_mask(t, u).any()

    def is_best_unifier(self, s: Subst, t: Term, u: Term) -> bool:
        self.require(t, u)
        if not unifies(s, t, u) or not is_idempotent(s):
            return False
        mask = self.unifier_mask(t, u)
        if not mask.any():
            return True
        return bool(self.moregen_mask(s)[mask].all())

    def best_unify_try(self, z: Attempt, t: Term, u: Term) -> bool:
        if isinstance(z, Failure):
            self.require(t, u)
            return self.cant_unify(t, u)
        if isinstance(z, Success):
            return self.is_best_unifier(z.subst, t, u)
        raise TypeError(f"not an attempt: {z!r}")

    def mgu_corollary(self, s: Subst, t: Term, u: Term) -> bool:
        """For every enumerated r: r unifies (t, u) iff r is an instance of s."""
        return bool((self.unifier_mask(t, u) == self.moregen_mask(s)).all())


@lru_cache(maxsize=8)
def oracle(uni: Universe) -> UniverseOracle:
    return UniverseOracle(uni)


def cant_unify_bruteforce(t: Term, u: Term, uni: Universe) -> bool:
    o = oracle(uni)
    o.require(t, u)
    return o.cant_unify(t, u)


def is_best_unifier(s: Subst, t: Term, u: Term, uni: Universe) -> bool:
    return oracle(uni).is_best_unifier(s, t, u)


def best_unify_try(z: Attempt, t: Term, u: Term, uni: Universe) -> bool:
    return oracle(uni).best_unify_try(z, t, u)


def check_tail_ordering(
    s: Subst, t1: Term, t2: Term, u1: Term, u2: Term, uni: Universe
) -> bool:
    """Tail ordering proposition; `s` must be a best unifier of `t1` and `u1`."""
    if not is_best_unifier(s, t1, u1, uni):
        raise PreconditionError(f"{s!r} is not a best unifier of {t1!r} and {u1!r}")
    return tail_ordering_holds(s, t1, t2, u1, u2)


def random_term(
    rng: random.Random, uni: Universe, depth: int, leaf_prob: float = 0.3
) -> Term:
    """Random term of Comb-depth <= `depth` over the universe's symbols."""
    if depth == 0 or rng.random() < leaf_prob:
        if rng.random() < 0.5:
            return Const(rng.choice(uni.constants))
        return Var(rng.choice(uni.variables))
    return Comb(
        random_term(rng, uni, depth - 1, leaf_prob),
        random_term(rng, uni, depth - 1, leaf_prob),
    )


def random_subst(rng: random.Random, uni: Universe, depth: int, max_len: int = 4) -> Subst:
    """Random binding list; keys may repeat and bindings may be trivial."""
    n = rng.randint(0, max_len)
    return Subst.of(
        (rng.choice(uni.variables), random_term(rng, uni, depth)) for _ in range(n)
    )


def random_subterm(rng: random.Random, t: Term) -> Term:
    return rng.choice(list(subterms(t)))
