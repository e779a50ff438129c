import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ATOMS4, P, nested_exprs, powerset
from se_check import l3
from se_check.classical import Pair
from se_check.syntax import (
    BOT,
    And,
    Atom,
    NonNestedRule,
    Not,
    Or,
    Program,
    Rule,
    Signature,
    as_non_nested,
    atoms,
    classical_sat,
)


def rule_of(text):
    (rule,) = P(text).rules
    return rule


@pytest.mark.parametrize(
    "text, expected",
    [
        ("p ; not b :- c, not d.", NonNestedRule(("p",), ("b",), ("c",), ("d",))),
        ("p.", NonNestedRule(("p",))),
        ("a ; not d :- not c.", NonNestedRule(("a",), ("d",), (), ("c",))),
        (":- q.", NonNestedRule((), (), ("q",), ())),
        ("p :- true.", NonNestedRule(("p",))),
    ],
)
def test_as_non_nested(text, expected):
    assert as_non_nested(rule_of(text)) == expected


@pytest.mark.parametrize(
    "text",
    ["a, b :- not (c ; not d).", "not not p.", "p :- not not q.", "p ; true.", "(p, q) ; r."],
)
def test_as_non_nested_rejects_nested(text):
    assert as_non_nested(rule_of(text)) is None


slot = st.lists(st.sampled_from(ATOMS4), unique=True, max_size=3)


@given(st.builds(NonNestedRule, slot, slot, slot, slot))
def test_non_nested_round_trip(nn):
    rule = nn.to_rule()
    assert as_non_nested(rule) == nn
    assert as_non_nested(rule).to_rule() == rule


def test_classical_sat_examples():
    assert classical_sat({"q"}, Atom("q"))
    assert not classical_sat({"q"}, rule_of("p :- q."))
    assert not classical_sat({"d"}, Or(Atom("c"), Not(Atom("d"))))


def test_signature_rejects_duplicates():
    with pytest.raises(ValueError):
        Signature(("a", "a"))


def test_program_rejects_foreign_atoms():
    with pytest.raises(ValueError):
        Program(Signature(("p",)), (Rule(Atom("q")),))


def test_rule_parts_must_be_nested_expressions():
    with pytest.raises(TypeError):
        Rule(Rule(Atom("p")).as_formula())


def test_atoms_in_first_occurrence_order():
    f = Or(And(Atom("c"), Atom("a")), Not(Atom("c")))
    assert atoms(f) == ["c", "a"]


def test_values_are_hashable_and_immutable():
    r = Rule(Atom("p"), Not(Atom("q")))
    assert hash(r) == hash(Rule(Atom("p"), Not(Atom("q"))))
    with pytest.raises(AttributeError):
        r.head = BOT


@settings(max_examples=200)
@given(nested_exprs())
def test_classical_sat_agrees_with_l3_on_total_interpretations(f):
    for i in powerset(ATOMS4):
        assert classical_sat(i, f) == (l3.eval(Pair(i, i), f) == l3.TriValue.TRUE)
