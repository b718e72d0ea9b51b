from hypothesis import strategies as st

from mwunify.subst import Subst
from mwunify.terms import Comb, Const, Var

CONSTS = ["A", "B", "F", "G"]
VARS = ["x", "y", "z"]

var_names = st.sampled_from(VARS)
leaves = st.one_of(st.builds(Const, st.sampled_from(CONSTS)), st.builds(Var, var_names))
terms = st.recursive(leaves, lambda kids: st.builds(Comb, kids, kids), max_leaves=12)
small_terms = st.recursive(leaves, lambda kids: st.builds(Comb, kids, kids), max_leaves=4)
ground_terms = st.recursive(
    st.builds(Const, st.sampled_from(CONSTS)), lambda kids: st.builds(Comb, kids, kids), max_leaves=8
)
binding_lists = st.lists(st.tuples(var_names, small_terms), max_size=4)
substs = binding_lists.map(Subst.of)
var_sets = st.frozensets(st.sampled_from(["a", "b", "c", "d", "x", "y"]))
