import subprocess
import sys

import pytest

from mwunify.cli import main
from mwunify.syntax import parse_subst, parse_term
from mwunify.verification import unifies


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_unify_worked_example(capsys):
    code, out, _ = run(capsys, "unify", "G[A; x]", "G[y; F[y]]")
    assert (code, out) == (0, "SUCCESS {x -> F[A]; y -> A}\n")


def test_unify_failure(capsys):
    code, out, _ = run(capsys, "unify", "G[x; x]", "G[y; F[y]]")
    assert (code, out) == (1, "FAILURE\n")


@pytest.mark.parametrize("t, u", [("x", "F[y]"), ("(x y)", "(y A)"), ("G[x; F[z]]", "G[F[y]; x]")])
def test_unify_output_reparses_to_a_unifier(capsys, t, u):
    code, out, _ = run(capsys, "unify", t, u)
    assert code == 0
    s = parse_subst(out.removeprefix("SUCCESS ").strip())
    assert unifies(s, parse_term(t), parse_term(u))


def test_apply_compose_occurs_vars(capsys):
    assert run(capsys, "apply", "G[A; x]", "{x -> F[A]; y -> A}")[:2] == (0, "G[A; F[A]]\n")
    assert run(capsys, "compose", "{x -> y}", "{y -> A}")[:2] == (0, "{x -> A; y -> A}\n")
    assert run(capsys, "occurs", "x", "x")[:2] == (0, "false\n")
    assert run(capsys, "occurs", "x", "G[A; x]")[:2] == (0, "true\n")
    assert run(capsys, "vars", "G[y; (x F[y])]")[:2] == (0, "x y\n")
    assert run(capsys, "vars", "A")[:2] == (0, "\n")


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "G[A; x]", "G[y; F[y]]")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 5
    assert lines[0].startswith("head-call cardv 2 -> 1 PASS")
    assert lines[3].startswith("tail-call cardv 2 -> 1 PASS")
    assert lines[-1] == "SUCCESS {x -> F[A]; y -> A}"


def test_trace_without_recursion(capsys):
    assert run(capsys, "trace", "A", "A")[:2] == (0, "SUCCESS {}\n")


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "unify", "G[A; x", "y")
    assert code == 2 and out == ""
    assert "1:7" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["unify", "x"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
    code, _, err = run(capsys, "check", "--consts", "0", "--vars", "1", "--depth", "0")
    assert code == 2 and err


def test_check_small_universe(capsys):
    code, out, _ = run(capsys, "check", "--consts", "1", "--vars", "1", "--depth", "1",
                       "--seed", "3", "--random", "20")
    assert code == 0
    assert out.splitlines()[-1] == "violations: 0"
    assert "best_unify_try:" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mwunify", "unify", "G[A; x]", "G[y; F[y]]"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "SUCCESS {x -> F[A]; y -> A}\n"
