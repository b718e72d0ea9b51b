"""Independent reference implementations used to compute expected values.

Deliberately naive and free of the package's own helpers so that tests do
not check an implementation against itself.
"""

from mwunify.terms import Comb, Const, Var


def positions(t, path=()):
    """Every (path, subterm) pair of t; the root has the empty path."""
    yield path, t
    if isinstance(t, Comb):
        yield from positions(t.left, path + ("L",))
        yield from positions(t.right, path + ("R",))


def occurs_strictly(t, u):
    return any(path and sub == t for path, sub in positions(u))


def var_names(t):
    return sorted({sub.name for _, sub in positions(t) if isinstance(sub, Var)})


def node_count(t):
    return sum(1 for _ in positions(t))


def lookup(key, bindings):
    """First-match lookup over a plain list of (key, value) pairs."""
    for k, v in bindings:
        if k == key:
            return v
    return Var(key)


def substitute(t, bindings):
    if isinstance(t, Const):
        return t
    if isinstance(t, Var):
        return lookup(t.name, bindings)
    return Comb(substitute(t.left, bindings), substitute(t.right, bindings))


def then(r, s):
    """Composition by its two recursion equations, on plain lists."""
    if not r:
        return list(s)
    (v, t), rest = r[0], r[1:]
    return [(v, substitute(t, s))] + then(rest, s)


def agree(r, s, names):
    return all(lookup(v, r) == lookup(v, s) for v in names)
