import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, T, consistent_pairs, fs, instantiate, nested_exprs, nested_programs, non_nested_programs, pair
from se_check import kernels
from se_check.bytecode import compile_formula
from se_check.classical import models_a, models_b, sat_a, sat_b, strongly_equivalent
from se_check.errors import SchemaMismatch, SignatureTooLarge
from se_check.l3 import (
    TriValue,
    check_transformation,
    eval as l3_eval,
    l3_models,
    l3_stable_models,
    l3_tautology,
    normalize,
    strongly_equivalent_l3,
    unfold,
)
from se_check.parser import parse_formula, print_program
from se_check.semantics import stable_models
from se_check.syntax import BOT, TOP, And, Arrow, Atom, Iff, L, M, Neg, NonNestedRule, Not, Or, Program, Rule, Signature, as_non_nested

a, b, c, d = (Atom(n) for n in "abcd")
HALF = TriValue.UNKNOWN


def test_value_rendering():
    assert [str(v) for v in TriValue] == ["0", "1/2", "1"]
    assert HALF.fraction * 2 == 1


def test_eval_examples():
    m = pair(set(), {"a"})
    assert l3_eval(m, a) == HALF
    assert l3_eval(m, L(a)) == TriValue.FALSE
    assert l3_eval(m, M(a)) == TriValue.TRUE
    assert l3_eval(m, Neg(a)) == HALF
    assert l3_eval(pair(set(), {"q"}), Not(Atom("q"))) == TriValue.FALSE


def test_fact_and_rule_from_top_differ():
    # {a} and {a <- true} have the same models but valuate differently at (∅,{a})
    m = pair(set(), {"a"})
    assert l3_eval(m, a) == HALF
    assert l3_eval(m, Arrow(a, TOP)) != HALF
    assert strongly_equivalent_l3(P("a."), T("a <- true."))
    assert not l3_tautology(Iff(a, Arrow(a, TOP)))


def test_eval_requires_consistency():
    with pytest.raises(ValueError):
        l3_eval(pair({"a"}, set()), a)


@pytest.mark.parametrize(
    "text",
    [
        "L (a, b) <-> L a, L b",
        "M (a, b) <-> M a, M b",
        "L (a ; b) <-> L a ; L b",
        "M (a ; b) <-> M a ; M b",
        "M L a <-> L a",
        "L M a <-> M a",
        "L L a <-> L a",
        "M ~L a <-> ~L a",
        "L ~M a <-> ~M a",
        "not a <-> (false <- a)",
    ],
)
def test_tautologies(text):
    assert l3_tautology(parse_formula(text))


@pytest.mark.parametrize("text", ["a ; ~a", "a <-> L a", "M a <-> L a", "a => a, a"])
def test_non_tautologies(text):
    assert not l3_tautology(parse_formula(text))


def test_excluded_middle_fails_only_at_unknown():
    f = Or(a, Neg(a))
    assert [int(l3_eval(m, f)) for m in consistent_pairs(["a"])] == [2, 1, 2]


def test_strongly_equivalent_l3_examples():
    assert strongly_equivalent_l3(P("a."), T("a <- true."))
    nested = P("a, b :- not (c ; not d).")
    assert strongly_equivalent_l3(nested, P("a ; not d :- not c. b ; not d :- not c."))
    assert not strongly_equivalent_l3(P("p."), P("p :- not q."))


def test_l3_models_examples(pi0):
    models = l3_models(T("b. not (a <- b)."))
    assert pair({"b"}, {"b"}) in models
    assert pair({"b"}, {"a", "b"}) in models
    assert l3_models(P("#atoms p, q.")) == set(consistent_pairs(["p", "q"]))
    expected = {m for m in consistent_pairs(["p", "q"]) if m in models_a(pi0) and m in models_b(pi0)}
    assert l3_models(pi0) == expected


def test_l3_stable_models_examples():
    assert l3_stable_models(T("b. a <- c. c <- a. (a <- b) <- c.")) == {fs("b"), fs("a", "b", "c")}
    assert l3_stable_models(T("b. not (a <- b).")) == {fs("b")}
    assert l3_stable_models(P("p :- not q.")) == {fs("p")}


def test_cap():
    sig = Signature(tuple(f"x{i}" for i in range(11)))
    with pytest.raises(SignatureTooLarge):
        l3_models(Program(sig, ()))


# -- normal form -------------------------------------------------------------


def test_normalize_worked_example():
    out = normalize(P("a, b :- not (c ; not d)."))
    body = [l for l in print_program(out).splitlines() if not l.startswith("#")]
    assert body == ["a ; not d :- not c.", "b ; not d :- not c."]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("p ; not b :- c, not d.", "p ; not b :- c, not d."),
        ("not not not p :- q.", "not p :- q."),
        ("not not p.", ":- not p."),
        ("p :- not not q.", "p ; not q."),
        ("p :- q ; r.", "p :- q.\np :- r."),
        ("p :- false.", ""),
        ("true :- p.", ""),
        ("p ; p :- q, q.", "p :- q."),
        ("p. p.", "p."),
    ],
)
def test_normalize_examples(text, expected):
    prog = P(text)
    out = normalize(prog)
    assert "\n".join(l for l in print_program(out).splitlines() if not l.startswith("#")) == expected
    assert out.signature == prog.signature


def test_normalize_sorts_slots_by_signature():
    out = normalize(P("#atoms z, a.\na ; z :- a, z."))
    (rule,) = out.rules
    assert as_non_nested(rule) == NonNestedRule(("z", "a"), (), ("z", "a"), ())


@settings(max_examples=150, deadline=None)
@given(nested_programs())
def test_normalize_output_is_non_nested_and_idempotent(prog):
    out = normalize(prog)
    assert out.is_non_nested()
    assert normalize(out) == out


@settings(max_examples=150, deadline=None)
@given(nested_programs())
def test_normalize_preserves_l3_models(prog):
    assert l3_models(normalize(prog)) == l3_models(prog)


# -- transformations ---------------------------------------------------------


def test_check_transformation_examples():
    assert check_transformation("iv", Not(Or(a, b)), And(Not(a), Not(b)))
    assert check_transformation(11, Rule(a, And(b, Not(Not(c)))), Rule(Or(a, Not(c)), b))
    assert check_transformation(3, And(a, Or(b, c)), Or(And(a, b), And(a, c)))
    # either orientation
    assert check_transformation("(iv)", And(Not(a), Not(b)), Not(Or(a, b)))


def test_check_transformation_mismatch():
    with pytest.raises(SchemaMismatch):
        check_transformation("iv", Not(Or(a, b)), Or(Not(a), Not(b)))
    with pytest.raises(SchemaMismatch):
        check_transformation(9, Rule(a, b), [Rule(a, b)])
    with pytest.raises(ValueError):
        check_transformation(13, a, a)


@pytest.mark.parametrize("index", range(1, 13))
@settings(max_examples=40, deadline=None)
@given(f=nested_exprs(("a", "b", "c")), g=nested_exprs(("a", "b", "c")), h=nested_exprs(("a", "b", "c")), variant=st.integers(0, 1))
def test_schema_instances(index, f, g, h, variant):
    lhs, rhs = instantiate(index, f, g, h, variant)
    assert check_transformation(index, lhs, rhs)


# -- cross-engine properties ---------------------------------------------------


def test_rule_reading_matches_both_translations():
    sig = ("a", "b")
    slots = [s for k in range(3) for s in itertools.combinations(sig, k)]
    for parts in itertools.product(slots, repeat=4):
        rule = NonNestedRule(*parts).to_rule()
        for m in consistent_pairs(sig):
            assert (l3_eval(m, rule.as_formula()) == TriValue.TRUE) == (sat_a(m, rule) and sat_b(m, rule))


@settings(max_examples=200, deadline=None)
@given(nested_exprs(("a", "b")), nested_exprs(("a", "b")))
def test_de_morgan(f, g):
    for m in consistent_pairs(("a", "b")):
        assert l3_eval(m, Neg(And(f, g))) == l3_eval(m, Or(Neg(f), Neg(g)))
        assert l3_eval(m, M(f)) == l3_eval(m, Neg(L(Neg(f))))


@settings(max_examples=150, deadline=None)
@given(st.recursive(
    st.sampled_from([a, b, TOP, BOT]),
    lambda kids: st.one_of(
        kids.map(Not), kids.map(Neg), kids.map(L), kids.map(M),
        st.tuples(kids, kids).map(lambda t: And(*t)),
        st.tuples(kids, kids).map(lambda t: Or(*t)),
        st.tuples(kids, kids).map(lambda t: Arrow(*t)),
        st.tuples(kids, kids).map(lambda t: Iff(*t)),
    ),
    max_leaves=8,
))
def test_unfold_and_vm_agree_with_eval(f):
    u = unfold(f)
    sig = Signature(("a", "b"))
    code = compile_formula(f, sig)
    proved, assumed = kernels.pair_grid(2)
    keep = (proved & ~assumed) == 0
    values = kernels.vm_eval(code, proved[keep], assumed[keep])
    for v, p, q in zip(values, proved[keep], assumed[keep]):
        m = pair(sig.atoms_of(int(p)), sig.atoms_of(int(q)))
        assert l3_eval(m, u) == l3_eval(m, f) == v


@settings(max_examples=100, deadline=None)
@given(non_nested_programs(max_rules=3), non_nested_programs(max_rules=3))
def test_l3_verdict_matches_classical(p1, p2):
    assert strongly_equivalent_l3(p1, p2) == strongly_equivalent(p1, p2)


@settings(max_examples=100, deadline=None)
@given(nested_programs())
def test_l3_stable_models_match_reduct(prog):
    assert l3_stable_models(prog) == stable_models(prog)
