"""First-order unification with executable correctness checks."""

from .matching import match_terms, more_gen
from .subst import (
    ANIL,
    Binding,
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
from .syntax import ParseError, parse_subst, parse_term, print_subst, print_term
from .terms import Comb, Const, Term, Var, occs, occs_eq, term_size, vars_of
from .unify import (
    FAILURE,
    OUT_OF_FUEL,
    Attempt,
    Failure,
    OutOfFuel,
    Success,
    TraceEvent,
    assign,
    attempt_then,
    unify,
    unify_bounded,
    unify_traced,
)
from .varset import VarSet
from .verification import Universe, best_unify_try, cant_unify_bruteforce, cardv, is_best_unifier, unifies

__all__ = [name for name in dir() if not name.startswith("_")]
