import pytest
from hypothesis import given, settings

from conftest import P, T, consistent_pairs, fs, nested_exprs, nested_programs, pair, powerset
from se_check.errors import UnsupportedOperator
from se_check.ht import ht_equilibrium, ht_equivalent, ht_models, ht_sat
from se_check.l3 import l3_models, l3_stable_models, l3_tautology, strongly_equivalent_l3
from se_check.parser import parse_formula
from se_check.semantics import stable_models
from se_check.syntax import Atom, L, Neg, Theory, classical_sat

THEORY_1 = "b. a <- c. c <- a. (a <- b) <- c."
THEORY_2 = "b. not (a <- b)."


def test_unique_ht_model_of_negated_conditional():
    assert ht_models(T(THEORY_2)) == {pair({"b"}, {"b"})}
    assert not ht_sat(pair({"b"}, {"a", "b"}), parse_formula("not (a <- b)"))


def test_l3_has_a_non_subtotal_model_there():
    extra = pair({"b"}, {"a", "b"})
    assert extra in l3_models(T(THEORY_2))
    assert extra not in ht_models(T(THEORY_2))


def test_equilibrium_examples():
    assert ht_equilibrium(T(THEORY_1)) == {fs("b")}
    assert ht_equilibrium(T(THEORY_2)) == {fs("b")}
    assert ht_equilibrium(P("p :- not q.")) == {fs("p")}
    assert ht_equilibrium(P("p :- not p.")) == set()


def test_nested_conditional_flattens_in_ht():
    assert ht_models(T("(a <- b) <- c.")) == ht_models(T("a <- b, c."))
    assert ht_equivalent(T("(a <- b) <- c."), T("a <- b, c."))
    assert not ht_equivalent(T("(a <- b) <- c."), T("a ; not c <- b."))


def test_nested_conditional_in_l3():
    # stated without proof for L3; checked here by enumeration
    lhs, rhs = T("(a <- b) <- c."), T("a ; not c <- b.")
    assert l3_models(lhs) == l3_models(rhs)
    assert strongly_equivalent_l3(lhs, rhs)
    assert l3_tautology(parse_formula("((a <- b) <- c) <-> (a ; not c <- b)"))


def test_negated_conditional_as_constraints():
    assert ht_equivalent(T("not (a <- b)."), T(":- not b. :- a."))


def test_divergence_of_stable_models():
    assert l3_stable_models(T(THEORY_1)) == {fs("b"), fs("a", "b", "c")}
    assert ht_equilibrium(T(THEORY_1)) == {fs("b")}


def test_unsupported_operators():
    with pytest.raises(UnsupportedOperator):
        ht_sat(pair(set(), {"a"}), L(Atom("a")))
    with pytest.raises(UnsupportedOperator):
        ht_models(Theory.from_formulas([Neg(Atom("a"))]))


def test_here_must_be_inside_there():
    with pytest.raises(ValueError):
        ht_sat(pair({"a"}, set()), Atom("a"))


@settings(max_examples=150, deadline=None)
@given(nested_exprs())
def test_total_pairs_are_classical(f):
    for i in powerset("abcd"):
        assert ht_sat(pair(i, i), f) == classical_sat(i, f)


@settings(max_examples=150, deadline=None)
@given(nested_programs(max_rules=3))
def test_grid_matches_recursive_evaluator(prog):
    models = ht_models(prog)
    for m in consistent_pairs(prog.signature.atoms):
        assert (m in models) == ht_sat(m, prog)


@settings(max_examples=150, deadline=None)
@given(nested_programs())
def test_equilibrium_is_stable(prog):
    assert ht_equilibrium(prog) == stable_models(prog) == l3_stable_models(prog)


@settings(max_examples=80, deadline=None)
@given(nested_programs(atoms=("a", "b", "c"), max_rules=2), nested_programs(atoms=("a", "b", "c"), max_rules=2))
def test_ht_and_l3_agree_on_programs(p1, p2):
    assert ht_equivalent(p1, p2) == strongly_equivalent_l3(p1, p2)
