"""Corpus sweeps: the correctness properties checked over whole universes.

Every checker returns a `Report`.  Checkers take their cases as plain
sequences and never depend on visiting order, so a caller may split the
work across processes and merge the reports with `Report.merge`.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .matching import more_gen
from .subst import Subst, apply_subst, compose, domain, is_idempotent, range_vars, subst_equal
from .terms import Comb, Term, Var, occs, occs_eq, proper_subterms, term_depth, vars_of
from .unify import Call, OutOfFuel, Success, assign, default_fuel, unify, unify_bounded, unify_traced
from .varset import VarSet
from .verification import (
    Universe,
    UniverseOracle,
    check_head_ordering,
    enumerate_substs,
    enumerate_terms,
    lexicographic_decrease,
    oracle,
    random_subst,
    random_subterm,
    random_term,
    tail_ordering_holds,
)

MAX_EXAMPLES = 5


@dataclass
class Report:
    """Counts of checked cases and of violations, keyed by property name."""

    checked: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)
    stats: Counter = field(default_factory=Counter)
    examples: dict[str, list[str]] = field(default_factory=dict)

    def check(self, name: str, ok: bool, case: object = None) -> bool:
        self.checked[name] += 1
        if not ok:
            self.violations[name] += 1
            shown = self.examples.setdefault(name, [])
            if len(shown) < MAX_EXAMPLES:
                shown.append(repr(case))
        return ok

    def merge(self, other: Report) -> Report:
        self.checked.update(other.checked)
        self.violations.update(other.violations)
        self.stats.update(other.stats)
        for k, v in other.examples.items():
            self.examples.setdefault(k, []).extend(v[: MAX_EXAMPLES - len(self.examples.get(k, []))])
        return self

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def total_violations(self) -> int:
        return sum(self.violations.values())

    def lines(self) -> list[str]:
        out = [f"{k}: {v}" for k, v in sorted(self.stats.items())]
        for name in sorted(self.checked):
            out.append(f"{name}: {self.checked[name]} checked, {self.violations[name]} violations")
        for name, shown in sorted(self.examples.items()):
            for case in shown:
                out.append(f"  violation {name}: {case}")
        return out


def check_unification(pairs: Iterable[tuple[Term, Term]], orc: UniverseOracle,
                      report: Optional[Report] = None) -> Report:
    """Correctness of `unify` and its variants on each pair.

    Covers the best-unify-try statement, idempotence, the most-general
    unifier corollary, symmetry, variable containment, the traced and
    fuel-bounded variants, and the ordering propositions on every trace event.
    """
    rep = report if report is not None else Report()
    for t, u in pairs:
        case = (t, u)
        z = unify(t, u)
        rep.stats["pairs"] += 1
        rep.check("best_unify_try", orc.best_unify_try(z, t, u), case)

        swapped = unify(u, t)
        rep.check("symmetry", isinstance(z, Success) == isinstance(swapped, Success), case)

        if isinstance(z, Success):
            s = z.subst
            rep.stats["successes"] += 1
            rep.check("idempotent", is_idempotent(s), case)
            rep.check("mgu_corollary", orc.mgu_corollary(s, t, u), case)
            rep.check("vars_contained",
                      (domain(s) | range_vars(s)) <= (vars_of(t) | vars_of(u)), case)
            if isinstance(swapped, Success):
                rep.check("symmetric_mutually_more_general",
                          more_gen(s, swapped.subst) is not None
                          and more_gen(swapped.subst, s) is not None, case)
        else:
            rep.stats["failures"] += 1

        bounded = unify_bounded(t, u, default_fuel(t, u))
        rep.check("bounded_no_out_of_fuel", not isinstance(bounded, OutOfFuel), case)
        rep.check("bounded_agrees", bounded == z, case)

        traced, trace = unify_traced(t, u, strict=False)
        rep.check("traced_agrees", traced == z, case)
        _check_trace(trace, orc, rep)
    return rep


def _check_trace(trace, orc: UniverseOracle, rep: Report) -> None:
    for ev in trace:
        rep.stats["trace_events"] += 1
        t1, t2, u1, u2 = ev.sons()
        rep.check("lexicographic_decrease", lexicographic_decrease(ev.caller, ev.callee), ev)
        rep.check("cardv_recorded",
                  ev.cardv_caller == _cardv(ev.caller) and ev.cardv_callee == _cardv(ev.callee), ev)
        if ev.which is Call.HEAD:
            rep.check("head_ordering", check_head_ordering(t1, t2, u1, u2), ev)
            continue
        s = ev.head_subst
        rep.check("tail_premise_best_unifier", orc.is_best_unifier(s, t1, u1), ev)
        rep.check("tail_ordering", tail_ordering_holds(s, t1, t2, u1, u2), ev)
        if ev.cardv_callee == ev.cardv_caller:
            rep.stats["tail_events_equal_cardv"] += 1


def _cardv(pair: tuple[Term, Term]) -> int:
    return (vars_of(pair[0]) | vars_of(pair[1])).card()


def check_variable_unifier(uni: Universe, orc: UniverseOracle,
                           report: Optional[Report] = None) -> Report:
    """[v -> t] is a best unifier of v and t whenever v does not occur in t."""
    rep = report if report is not None else Report()
    for v in uni.variables:
        for t in enumerate_terms(uni):
            if occs(Var(v), t):
                continue
            rep.check("variable_unifier", orc.is_best_unifier(Subst.of([(v, t)]), Var(v), t), (v, t))
            rep.check("assign_best_try", orc.best_unify_try(assign(v, t), Var(v), t), (v, t))
    return rep


def check_combination_lemmas(pairs: Iterable[tuple[Term, Term]], orc: UniverseOracle,
                             report: Optional[Report] = None) -> Report:
    """The three ways unifying two combinations can go, checked per pair."""
    rep = report if report is not None else Report()
    for t, u in pairs:
        if not (isinstance(t, Comb) and isinstance(u, Comb)):
            continue
        t1, t2, u1, u2 = t.left, t.right, u.left, u.right
        head = unify(t1, u1)
        if orc.cant_unify(t1, u1):
            rep.check("cant_unify_head_propagates", orc.cant_unify(t, u), (t, u))
        if not isinstance(head, Success) or not orc.is_best_unifier(head.subst, t1, u1):
            continue
        s1 = head.subst
        t2s, u2s = apply_subst(t2, s1), apply_subst(u2, s1)
        if orc.cant_unify(t2s, u2s):
            rep.check("cant_unify_tail_propagates", orc.cant_unify(t, u), (t, u))
        tail = unify(t2s, u2s)
        if isinstance(tail, Success) and orc.is_best_unifier(tail.subst, t2s, u2s):
            rep.check("best_unifier_composes",
                      orc.is_best_unifier(compose(s1, tail.subst), t, u), (t, u))
    return rep


def check_occurs_order(terms: Sequence[Term], rng: random.Random, deeper: Sequence[Term] = (),
                       samples: int = 0, report: Optional[Report] = None) -> Report:
    """Occurs-in is a strict partial order consistent with occs_eq and size."""
    rep = report if report is not None else Report()
    below = {t: proper_subterms(t) for t in terms}
    for t in terms:
        rep.check("occs_anti_reflexive", not occs(t, t), t)
        for u in terms:
            o = occs(t, u)
            rep.check("occs_matches_subterms", o == (t in below[u]), (t, u))
            rep.check("occs_anti_symmetric", not (o and occs(u, t)), (t, u))
            rep.check("occs_eq_definition", occs_eq(t, u) == (t == u or o), (t, u))
            rep.check("occs_comb_immediate", occs(t, Comb(t, u)) and occs(u, Comb(t, u)), (t, u))
    for u in terms:
        for t in below[u]:
            for w in terms:
                if u in below[w]:
                    rep.check("occs_transitive", occs(t, w), (t, u, w))
    pool = list(deeper)
    for _ in range(samples if pool else 0):
        w = rng.choice(pool)
        u = random_subterm(rng, w) if rng.random() < 0.7 else rng.choice(pool)
        t = random_subterm(rng, u) if rng.random() < 0.7 else rng.choice(pool)
        if occs(t, u) and occs(u, w):
            rep.stats["transitivity_samples_with_premise"] += 1
        rep.check("occs_transitive_sampled", not (occs(t, u) and occs(u, w)) or occs(t, w), (t, u, w))
    return rep


def check_monotonicity(terms: Sequence[Term], substs: Sequence[Subst],
                       triples: Iterable[tuple[Term, Term, Subst]] = (),
                       report: Optional[Report] = None) -> Report:
    """occs(t, u) implies occs(t s, u s): exhaustively over `terms` x `substs`
    for every occurring pair, then over the explicit `triples`."""
    rep = report if report is not None else Report()
    for u in terms:
        for t in proper_subterms(u):
            for s in substs:
                rep.check("monotonicity", occs(apply_subst(t, s), apply_subst(u, s)), (t, u, s))
    for t, u, s in triples:
        if occs(t, u):
            rep.stats["monotonicity_random_premise"] += 1
        rep.check("monotonicity_random",
                  not occs(t, u) or occs(apply_subst(t, s), apply_subst(u, s)), (t, u, s))
    return rep


def check_composition(terms: Sequence[Term], substs: Sequence[Subst],
                      triples: Iterable[tuple[Term, Subst, Subst]] = (),
                      report: Optional[Report] = None) -> Report:
    """apply(t, compose(r, s)) == apply(apply(t, r), s)."""
    rep = report if report is not None else Report()
    cases = itertools.chain(
        ((t, r, s) for r in substs for s in substs for t in terms), triples)
    for t, r, s in cases:
        rep.check("composition_law",
                  apply_subst(t, compose(r, s)) == apply_subst(apply_subst(t, r), s), (t, r, s))
    return rep


def check_set_laws(base: Sequence[str], report: Optional[Report] = None) -> Report:
    """Union laws and extensionality over every subset of `base`."""
    rep = report if report is not None else Report()
    subsets = [VarSet(c) for n in range(len(base) + 1) for c in itertools.combinations(base, n)]
    for a in subsets:
        rep.check("union_idempotent", a | a == a, a)
        for b in subsets:
            rep.check("union_commutative", a | b == b | a, (a, b))
            same = all(a.member(x) == b.member(x) for x in base)
            rep.check("extensional_equality", (a == b) == same, (a, b))
            rep.check("card_union_bound",
                      (a | b).card() <= a.card() + b.card()
                      and ((a | b).card() == a.card() + b.card()) == (not (a & b)), (a, b))
            if a.is_proper_subset(b):
                rep.check("proper_subset_card", a.card() < b.card(), (a, b))
            for c in subsets:
                rep.check("union_associative", (a | b) | c == a | (b | c), (a, b, c))
    return rep


class _HashCons:
    """Structural term ids: equal terms get equal ids, combined elementwise
    over whole arrays of argument ids."""

    def __init__(self) -> None:
        self._leaves: dict[Term, int] = {}
        self._combs: dict[int, int] = {}
        self._next = 0

    @property
    def size(self) -> int:
        return self._next

    def _fresh(self) -> int:
        self._next += 1
        return self._next - 1

    def term(self, t: Term) -> int:
        if isinstance(t, Comb):
            return int(self.comb(np.array([self.term(t.left)]), np.array([self.term(t.right)]))[0])
        got = self._leaves.get(t)
        if got is None:
            got = self._leaves[t] = self._fresh()
        return got

    def comb(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        codes = (left.astype(np.int64) << 32) | right.astype(np.int64)
        uniq, inverse = np.unique(codes, return_inverse=True)
        table = self._combs
        ids = np.array([table[c] if c in table else table.setdefault(c, self._fresh())
                        for c in uniq.tolist()], dtype=np.int64)
        return ids[inverse.reshape(codes.shape)]


def brute_force_more_gen(uni: Universe, witness_depth: int) -> tuple[list[Subst], np.ndarray]:
    """For every pair of enumerated substitutions, does a witness exist?

    Searches every r mapping the universe variables to terms of depth
    <= `witness_depth`.  ``s1 then r`` and ``s2`` agree everywhere iff they
    agree on the universe variables, since both fix every other variable.
    Terms are compared through hash-consed ids, evaluated for all candidate
    witnesses at once.  Returns the substitutions and a boolean matrix
    indexed [s1, s2].
    """
    substs = enumerate_substs(uni)
    values = enumerate_terms(uni, witness_depth)
    names = uni.variables
    hc = _HashCons()
    value_ids = np.array([hc.term(v) for v in values], dtype=np.int64)
    grid = np.indices((len(values),) * len(names)).reshape(len(names), -1)
    # witness_image[v][k]: id of the value the k-th candidate r gives to v
    witness_image = {v: value_ids[grid[k]] for k, v in enumerate(names)}
    cache: dict[Term, np.ndarray] = {}

    def images(p: Term) -> np.ndarray:
        got = cache.get(p)
        if got is None:
            if isinstance(p, Var):
                got = witness_image.get(p.name)
                if got is None:
                    got = np.full(grid.shape[1], hc.term(p), dtype=np.int64)
            elif isinstance(p, Comb):
                got = hc.comb(images(p.left), images(p.right))
            else:
                got = np.full(grid.shape[1], hc.term(p), dtype=np.int64)
            cache[p] = got
        return got

    reach_parts = [[images(apply_subst(Var(v), s1)) for v in names] for s1 in substs]
    target_ids = np.array([[hc.term(apply_subst(Var(v), s)) for v in names] for s in substs],
                          dtype=np.int64)
    radix = hc.size

    def encode(parts: Sequence[np.ndarray]) -> np.ndarray:
        out = np.zeros_like(parts[0])
        for part in parts:
            out = out * radix + part
        return out

    targets = encode(list(target_ids.T))
    result = np.zeros((len(substs), len(substs)), dtype=bool)
    for i, parts in enumerate(reach_parts):
        result[i] = np.isin(targets, encode(parts))
    return substs, result


def check_more_gen(uni: Universe, witness_depth: int, report: Optional[Report] = None) -> Report:
    """more_gen agrees with brute-force witness search and is sound."""
    rep = report if report is not None else Report()
    substs, expected = brute_force_more_gen(uni, witness_depth)
    for i, s1 in enumerate(substs):
        for j, s2 in enumerate(substs):
            r = more_gen(s1, s2)
            rep.check("more_gen_agrees_bruteforce", (r is not None) == bool(expected[i, j]), (s1, s2))
            if r is not None:
                rep.check("more_gen_sound", subst_equal(s2, compose(s1, r)), (s1, s2, r))
    return rep


def random_pairs(rng: random.Random, uni: Universe, n: int, depth: int) -> list[tuple[Term, Term]]:
    out = []
    for _ in range(n):
        t = random_term(rng, uni, depth)
        u = random_term(rng, uni, depth) if rng.random() < 0.5 else _perturb(rng, uni, t)
        out.append((t, u))
    return out


def _perturb(rng: random.Random, uni: Universe, t: Term) -> Term:
    """A variant of `t` with some subterms replaced, so pairs often unify."""
    if rng.random() < 0.3:
        return random_term(rng, uni, max(term_depth(t) - 1, 0))
    if isinstance(t, Comb):
        return Comb(_perturb(rng, uni, t.left), _perturb(rng, uni, t.right))
    return t


MORE_GEN_BRUTE_LIMIT = 500


def run_sweep(uni: Universe, *, seed: int = 0, n_random: int = 0, random_depth: int = 4) -> Report:
    """The full verification sweep: all ordered pairs of the universe plus
    `n_random` random larger pairs, together with the term and set laws.

    The brute-force check of `more_gen` is skipped when the universe has more
    than MORE_GEN_BRUTE_LIMIT enumerated substitutions.
    """
    rng = random.Random(seed)
    orc = oracle(uni)
    terms = enumerate_terms(uni)
    rep = Report()
    rep.stats["terms"] = len(terms)
    rep.stats["enumerated_substs"] = len(orc.substs)
    pairs = [(t, u) for t in terms for u in terms]
    check_unification(pairs, orc, rep)
    check_variable_unifier(uni, orc, rep)
    check_combination_lemmas(pairs, orc, rep)
    deeper = [random_term(rng, uni, uni.max_depth + 1, leaf_prob=0.15) for _ in range(200)]
    check_occurs_order(terms, rng, deeper, samples=n_random, report=rep)
    check_monotonicity(terms, orc.substs, report=rep)
    check_composition(enumerate_terms(uni, min(uni.max_depth, 1)), enumerate_substs(uni, 0), report=rep)
    check_set_laws(uni.variables, report=rep)
    if len(orc.substs) <= MORE_GEN_BRUTE_LIMIT:
        check_more_gen(uni, uni.value_depth + 1, rep)
    else:
        rep.stats["more_gen_bruteforce_skipped"] = 1
    if n_random:
        extra = random_pairs(rng, uni, n_random, random_depth)
        check_unification(extra, orc, rep)
        check_monotonicity((), (), random_monotonicity_triples(rng, uni, n_random, random_depth), rep)
        check_composition((), (), random_composition_triples(rng, uni, n_random, random_depth), rep)
    return rep


def random_monotonicity_triples(rng: random.Random, uni: Universe, n: int, depth: int,
                                subst_depth: int = 3) -> list[tuple[Term, Term, Subst]]:
    """Random (t, u, s); t is a subterm of u about half of the time."""
    out = []
    for _ in range(n):
        u = random_term(rng, uni, depth)
        t = random_subterm(rng, u) if rng.random() < 0.5 else random_term(rng, uni, depth)
        out.append((t, u, random_subst(rng, uni, subst_depth)))
    return out


def random_composition_triples(rng: random.Random, uni: Universe, n: int, depth: int,
                               subst_depth: int = 3) -> list[tuple[Term, Subst, Subst]]:
    return [(random_term(rng, uni, depth), random_subst(rng, uni, subst_depth),
             random_subst(rng, uni, subst_depth)) for _ in range(n)]
