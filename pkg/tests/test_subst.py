from hypothesis import given

from mwunify.subst import (
    ANIL,
    Subst,
    acons,
    apply_subst,
    assoc,
    canonicalize,
    compose,
    domain,
    is_idempotent,
    range_vars,
    subst_equal,
)
from mwunify.terms import Comb, Const, Var, occs, proper_subterms
from mwunify.varset import VarSet

import oracles
from strategies import VARS, binding_lists, substs, terms

A, B, F, G = Const("A"), Const("B"), Const("F"), Const("G")
x, y = Var("x"), Var("y")
FA = Comb(F, A)


def S(*pairs):
    return Subst.of(pairs)


def test_assoc():
    assert assoc(x, "x", ANIL) == x
    assert assoc(x, "x", S(("x", A), ("x", B))) == A
    assert assoc(y, "y", S(("x", A))) == y


def test_acons_prepends():
    assert acons("x", A, S(("x", B))) == S(("x", A), ("x", B))


def test_apply_worked_example():
    # G[A; x] under {x -> F[A]; y -> A} is G[A; F[A]]
    assert apply_subst(Comb(Comb(G, A), x), S(("x", FA), ("y", A))) == Comb(Comb(G, A), FA)
    assert apply_subst(Comb(x, y), S(("x", y))) == Comb(y, y)


@given(terms)
def test_apply_empty_is_identity(t):
    assert apply_subst(t, ANIL) == t


def test_compose_examples():
    s = S(("x", FA))
    assert compose(ANIL, s) == s
    assert compose(S(("y", A)), s) == S(("y", A), ("x", FA))
    assert compose(S(("x", y)), S(("y", A))) == S(("x", A), ("y", A))


def test_domain_examples():
    assert domain(ANIL) == VarSet()
    assert domain(S(("x", x), ("y", A))) == VarSet("y")
    assert domain(S(("x", A), ("x", B))) == VarSet("x")


def test_range_vars_examples():
    assert range_vars(ANIL) == VarSet()
    assert range_vars(S(("x", Comb(F, y)))) == VarSet("y")
    assert range_vars(S(("x", A))) == VarSet()
    # a shadowed value does not contribute
    assert range_vars(S(("x", A), ("x", y))) == VarSet()


def test_subst_equal_identifications():
    assert subst_equal(S(("x", x)), ANIL)
    assert subst_equal(S(("x", A), ("x", B)), S(("x", A)))
    assert subst_equal(S(("x", A), ("y", B)), S(("y", B), ("x", A)))
    assert not subst_equal(S(("x", A)), S(("x", B)))


def test_canonicalize_examples():
    assert canonicalize(S(("x", x))) == ANIL
    assert canonicalize(S(("y", A), ("x", B))) == S(("x", B), ("y", A))
    assert canonicalize(S(("x", A), ("x", B))) == S(("x", A))


def test_is_idempotent_examples():
    assert is_idempotent(ANIL)
    assert is_idempotent(S(("x", FA), ("y", A)))
    assert not is_idempotent(S(("x", y), ("y", A)))


@given(terms, binding_lists)
def test_apply_matches_clause_oracle(t, pairs):
    assert apply_subst(t, Subst.of(pairs)) == oracles.substitute(t, pairs)


@given(binding_lists, binding_lists)
def test_compose_matches_recursion_equations(r, s):
    assert list(compose(Subst.of(r), Subst.of(s))) == list(Subst.of(oracles.then(r, s)))


@given(terms, substs, substs)
def test_composition_law(t, r, s):
    assert apply_subst(t, compose(r, s)) == apply_subst(apply_subst(t, r), s)


@given(terms, substs)
def test_monotonicity(u, s):
    for t in proper_subterms(u):
        assert occs(apply_subst(t, s), apply_subst(u, s))


@given(substs)
def test_empty_is_unit(s):
    assert subst_equal(compose(s, ANIL), s)
    assert subst_equal(compose(ANIL, s), s)


@given(substs, substs, substs)
def test_compose_associative(r, s, q):
    assert subst_equal(compose(compose(r, s), q), compose(r, compose(s, q)))


@given(substs, substs)
def test_domain_of_composition(r, s):
    assert domain(compose(r, s)) <= domain(r) | domain(s)


@given(substs, substs)
def test_subst_equal_is_pointwise_agreement(r, s):
    assert subst_equal(r, s) == oracles.agree(list(_pairs(r)), list(_pairs(s)), VARS)


def _pairs(s):
    return ((b.key, b.value) for b in s)


@given(substs)
def test_canonicalize_is_a_normal_form(s):
    c = canonicalize(s)
    assert subst_equal(c, s)
    assert canonicalize(c) == c
    assert [b.key for b in c] == sorted(domain(s))


@given(substs, substs)
def test_equal_classes_canonicalize_identically(r, s):
    assert subst_equal(r, s) == (canonicalize(r) == canonicalize(s))


@given(substs)
def test_idempotent_means_domain_and_range_disjoint(s):
    assert is_idempotent(s) == (not (domain(s) & range_vars(s)))
