import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from se_check.classical import Pair
from se_check.parser import parse_program, parse_theory
from se_check.semantics import random_program
from se_check.syntax import (
    BOT,
    TOP,
    And,
    Atom,
    NonNestedRule,
    Not,
    Or,
    Program,
    Rule,
    Signature,
    as_non_nested,
    classical_sat,
)

ATOMS4 = ("a", "b", "c", "d")


def P(text):
    return parse_program(text)


def T(text):
    return parse_theory(text)


def fs(*atoms):
    return frozenset(atoms)


def pair(p, a):
    return Pair(frozenset(p), frozenset(a))


def powerset(atoms):
    atoms = list(atoms)
    for k in range(len(atoms) + 1):
        for combo in itertools.combinations(atoms, k):
            yield frozenset(combo)


def all_pairs(atoms):
    subsets = list(powerset(atoms))
    return [Pair(p, a) for a in subsets for p in subsets]


def consistent_pairs(atoms):
    return [m for m in all_pairs(atoms) if m.proved <= m.assumed]


def brute_minimal_models(program):
    """Oracle: powerset scan with classical_sat, then subset filtering."""
    models = [i for i in powerset(program.signature) if classical_sat(i, program)]
    return {m for m in models if not any(o < m for o in models)}


def brute_stable_models(program):
    """Oracle for non-nested programs: the reduct built by hand from literal slots."""
    out = set()
    for i in powerset(program.signature):
        kept = []
        for rule in program.rules:
            r = as_non_nested(rule)
            if any(d in i for d in r.body_neg) or any(b not in i for b in r.head_neg):
                continue
            kept.append(Rule(_disj(r.head_pos), _conj(r.body_pos)))
        red = Program(program.signature, tuple(kept))
        if i in brute_minimal_models(red):
            out.add(i)
    return out


def _disj(names):
    f = BOT
    for n in names:
        f = Atom(n) if f is BOT else Or(f, Atom(n))
    return f


def _conj(names):
    f = TOP
    for n in names:
        f = Atom(n) if f is TOP else And(f, Atom(n))
    return f


def seeded_programs(seed, count, max_atoms=4, max_rules=4):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, max_atoms + 1))
        sig = Signature(ATOMS4[:n])
        out.append(random_program(rng, sig, max_rules))
    return out


# -- hypothesis strategies ---------------------------------------------------


def nested_exprs(atoms=ATOMS4, max_depth=3):
    leaves = st.sampled_from([Atom(a) for a in atoms] + [TOP, BOT])

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.tuples(children, children).map(lambda t: And(*t)),
            st.tuples(children, children).map(lambda t: Or(*t)),
        )

    return st.recursive(leaves, extend, max_leaves=2 ** max_depth)


def nested_rules(atoms=ATOMS4):
    return st.builds(Rule, nested_exprs(atoms), nested_exprs(atoms))


@st.composite
def nested_programs(draw, atoms=ATOMS4, max_rules=3):
    n = draw(st.integers(1, len(atoms)))
    sig = Signature(atoms[:n])
    rules = draw(st.lists(nested_rules(atoms[:n]), max_size=max_rules))
    return Program(sig, tuple(rules))


@st.composite
def non_nested_programs(draw, atoms=ATOMS4, max_rules=4):
    n = draw(st.integers(1, len(atoms)))
    sig = atoms[:n]
    slot = st.lists(st.sampled_from(sig), unique=True, max_size=2)
    rules = draw(st.lists(st.builds(NonNestedRule, slot, slot, slot, slot), max_size=max_rules))
    return Program(Signature(sig), tuple(rules))


@pytest.fixture
def pi0():
    return P("p :- q.")


def instantiate(index, f, g, h, variant=0):
    """Both sides of transformation ``index`` (1..12) for subformulas f, g, h.

    Built straight from the schema table, independently of the library's
    matchers.  ``variant`` picks the conjunctive or disjunctive half where a
    schema has two.
    """
    kind = And if variant == 0 else Or
    if index == 1:
        return kind(f, g), kind(g, f)
    if index == 2:
        return kind(kind(f, g), h), kind(f, kind(g, h))
    if index == 3:
        if variant == 0:
            return And(f, Or(g, h)), Or(And(f, g), And(f, h))
        return Or(f, And(g, h)), And(Or(f, g), Or(f, h))
    if index == 4:
        if variant == 0:
            return Not(Or(f, g)), And(Not(f), Not(g))
        return Not(And(f, g)), Or(Not(f), Not(g))
    if index == 5:
        return Not(Not(Not(f))), Not(f)
    if index == 6:
        return (And(f, TOP), f) if variant == 0 else (Or(f, TOP), TOP)
    if index == 7:
        return (And(f, BOT), BOT) if variant == 0 else (Or(f, BOT), f)
    if index == 8:
        return (Not(TOP), BOT) if variant == 0 else (Not(BOT), TOP)
    if index == 9:
        return Rule(And(f, g), h), [Rule(f, h), Rule(g, h)]
    if index == 10:
        return Rule(f, Or(g, h)), [Rule(f, g), Rule(f, h)]
    if index == 11:
        return Rule(f, And(g, Not(Not(h)))), Rule(Or(f, Not(h)), g)
    if index == 12:
        return Rule(Or(f, Not(Not(g))), h), Rule(f, And(Not(g), h))
    raise ValueError(index)
