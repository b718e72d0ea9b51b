import random

from mwunify.sweep import (
    Report,
    check_combination_lemmas,
    check_composition,
    check_monotonicity,
    check_more_gen,
    check_occurs_order,
    check_set_laws,
    check_unification,
    check_variable_unifier,
    random_pairs,
    run_sweep,
)
from mwunify.verification import Universe, enumerate_substs, enumerate_terms, oracle

UNI = Universe(("A", "B"), ("x", "y"), 1)


def pairs(uni):
    ts = enumerate_terms(uni)
    return [(t, u) for t in ts for u in ts]


def test_report_bookkeeping():
    rep = Report()
    assert rep.check("p", True) and not rep.check("p", False, "case")
    assert rep.checked["p"] == 2 and rep.violations["p"] == 1
    assert not rep.ok and rep.total_violations() == 1
    assert "  violation p: 'case'" in rep.lines()
    other = Report()
    other.check("q", True)
    rep.merge(other)
    assert rep.checked["q"] == 1


def test_reports_are_order_independent():
    ps = pairs(UNI)
    orc = oracle(UNI)
    whole = check_unification(ps, orc)
    halves = check_unification(ps[::2], orc).merge(check_unification(ps[1::2], orc))
    assert whole.checked == halves.checked and whole.violations == halves.violations
    assert whole.ok


def test_small_universe_checks_pass():
    orc = oracle(UNI)
    rng = random.Random(0)
    reps = [
        check_variable_unifier(UNI, orc),
        check_combination_lemmas(pairs(Universe(("A", "B"), ("x", "y"), 2)), orc),
        check_occurs_order(enumerate_terms(UNI), rng, enumerate_terms(UNI), samples=200),
        check_monotonicity(enumerate_terms(UNI), enumerate_substs(UNI, 0)),
        check_composition(enumerate_terms(UNI, 0), enumerate_substs(UNI, 0)),
        check_set_laws("abc"),
        check_more_gen(Universe(("A",), ("x", "y"), 1), 2),
        check_unification(random_pairs(rng, UNI, 100, 4), orc),
    ]
    for rep in reps:
        assert rep.ok, rep.lines()
        assert sum(rep.checked.values()) > 0


def test_checkers_detect_violations(monkeypatch):
    from mwunify import sweep

    # composition that forgets its second argument
    monkeypatch.setattr(sweep, "compose", lambda r, s: r)
    rep = check_composition(enumerate_terms(UNI, 0), enumerate_substs(UNI, 0))
    assert not rep.ok and rep.violations["composition_law"] > 0
    assert rep.examples["composition_law"]


def test_run_sweep_tiny():
    rep = run_sweep(Universe(("A",), ("x",), 1), seed=1, n_random=30)
    assert rep.ok, rep.lines()
    assert rep.stats["terms"] == 6
    assert rep.checked["more_gen_agrees_bruteforce"] > 0
