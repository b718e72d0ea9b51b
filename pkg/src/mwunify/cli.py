"""Command-line front end.

Exit codes: 0 success, 1 unification failure or check violations,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .subst import apply_subst, compose
from .sweep import run_sweep
from .syntax import ParseError, parse_subst, parse_term, print_subst, print_term
from .terms import occs, vars_of
from .unify import Call, Success, unify, unify_traced
from .verification import Universe

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def _result_line(z) -> str:
    return f"SUCCESS {print_subst(z.subst)}" if isinstance(z, Success) else "FAILURE"


def cmd_unify(args) -> int:
    z = unify(parse_term(args.t), parse_term(args.u))
    print(_result_line(z))
    return EXIT_OK if isinstance(z, Success) else EXIT_FAILURE


def cmd_apply(args) -> int:
    print(print_term(apply_subst(parse_term(args.t), parse_subst(args.s))))
    return EXIT_OK


def cmd_compose(args) -> int:
    print(print_subst(compose(parse_subst(args.s1), parse_subst(args.s2))))
    return EXIT_OK


def cmd_occurs(args) -> int:
    print("true" if occs(parse_term(args.t), parse_term(args.u)) else "false")
    return EXIT_OK


def cmd_vars(args) -> int:
    print(" ".join(vars_of(parse_term(args.t))))
    return EXIT_OK


def cmd_trace(args) -> int:
    z, trace = unify_traced(parse_term(args.t), parse_term(args.u), strict=False)
    for ev in trace:
        a, b = ev.callee
        verdict = "PASS" if ev.ordering_ok() else "FAIL"
        line = f"{ev.which.value} cardv {ev.cardv_caller} -> {ev.cardv_callee} {verdict}"
        line += f"  {print_term(a)} =? {print_term(b)}"
        if ev.which is Call.TAIL:
            line += f"  under {print_subst(ev.head_subst)}"
        print(line)
    print(_result_line(z))
    return EXIT_OK if isinstance(z, Success) else EXIT_FAILURE


def cmd_check(args) -> int:
    if args.consts < 1 or args.vars < 1 or args.depth < 0 or args.random < 0:
        raise _UsageError("--consts and --vars must be >= 1, --depth and --random >= 0")
    subst_depth = min(args.depth, 1) if args.subst_depth is None else args.subst_depth
    uni = Universe.sized(args.consts, args.vars, args.depth, subst_depth)
    report = run_sweep(uni, seed=args.seed, n_random=args.random)
    for line in report.lines():
        print(line)
    print(f"violations: {report.total_violations()}")
    return EXIT_OK if report.ok else EXIT_FAILURE


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mwunify", description="First-order unification toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, *operands):
        p = sub.add_parser(name, help=help)
        for op in operands:
            p.add_argument(op)
        p.set_defaults(func=func)
        return p

    add("unify", cmd_unify, "unify two terms", "t", "u")
    add("apply", cmd_apply, "apply a substitution to a term", "t", "s")
    add("compose", cmd_compose, "compose two substitutions (s1 then s2)", "s1", "s2")
    add("occurs", cmd_occurs, "does T occur strictly inside U", "t", "u")
    add("vars", cmd_vars, "variables of a term, sorted", "t")
    add("trace", cmd_trace, "unify, printing the termination measure of every call", "t", "u")
    p = add("check", cmd_check, "run the verification sweep over a universe")
    p.add_argument("--consts", type=int, required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--subst-depth", type=int, default=None,
                   help="depth bound for enumerated substitution values (default min(depth, 1))")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random", type=int, default=0, help="number of extra random pairs")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"mwunify: parse error at {e}", file=sys.stderr)
    except _UsageError as e:
        print(f"mwunify: {e}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
