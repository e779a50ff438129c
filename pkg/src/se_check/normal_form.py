"""Unfolding of nested rules into non-nested ones.

The rewriting strategy is fixed so that output is reproducible:

1. push ``not`` inwards (``not`` over ``;``/``,``, triple negation, ``not``
   over constants) until it only covers atoms, leaving literals ``a``,
   ``not a`` and ``not not a``;
2. drop ``true``/``false`` operands;
3. bring the head into conjunctive and the body into disjunctive form and
   split the rule, one rule per (head clause, body term);
4. move ``not not a`` from the body into the head as ``not a``, and from the
   head into the body as ``not a``;
5. sort literals by signature position inside each slot and drop duplicates.

Rules whose body became ``false`` or whose head became ``true`` are dropped:
they hold in every interpretation.
"""

from __future__ import annotations

from .syntax import (
    BOT,
    TOP,
    And,
    Atom,
    Bot,
    Formula,
    NonNestedRule,
    Not,
    Or,
    Program,
    Top,
)


def _neg(f: Formula) -> Formula:
    """``not f`` with the negation pushed inwards."""
    if isinstance(f, Atom):
        return Not(f)
    if isinstance(f, Top):
        return BOT
    if isinstance(f, Bot):
        return TOP
    if isinstance(f, And):
        return Or(_neg(f.left), _neg(f.right))
    if isinstance(f, Or):
        return And(_neg(f.left), _neg(f.right))
    if isinstance(f, Not):
        return _dneg(f.child)
    raise TypeError(f"not a nested expression: {f!r}")


def _dneg(f: Formula) -> Formula:
    """``not not f`` with the negations pushed inwards."""
    if isinstance(f, Atom):
        return Not(Not(f))
    if isinstance(f, (Top, Bot)):
        return f
    if isinstance(f, And):
        return And(_dneg(f.left), _dneg(f.right))
    if isinstance(f, Or):
        return Or(_dneg(f.left), _dneg(f.right))
    if isinstance(f, Not):
        return _neg(f.child)
    raise TypeError(f"not a nested expression: {f!r}")


def push_not(f: Formula) -> Formula:
    if isinstance(f, Not):
        return _neg(f.child)
    if isinstance(f, (And, Or)):
        return type(f)(push_not(f.left), push_not(f.right))
    return f


def simplify(f: Formula) -> Formula:
    if not isinstance(f, (And, Or)):
        return f
    x, y = simplify(f.left), simplify(f.right)
    if isinstance(f, And):
        if isinstance(x, Bot) or isinstance(y, Bot):
            return BOT
        if isinstance(x, Top):
            return y
        if isinstance(y, Top):
            return x
        return And(x, y)
    if isinstance(x, Top) or isinstance(y, Top):
        return TOP
    if isinstance(x, Bot):
        return y
    if isinstance(y, Bot):
        return x
    return Or(x, y)


def _cnf(f: Formula) -> list:
    """Clauses (lists of literals); [] is true, [[]] is false."""
    if isinstance(f, Top):
        return []
    if isinstance(f, Bot):
        return [[]]
    if isinstance(f, And):
        return _cnf(f.left) + _cnf(f.right)
    if isinstance(f, Or):
        return [c + d for c in _cnf(f.left) for d in _cnf(f.right)]
    return [[f]]


def _dnf(f: Formula) -> list:
    """Terms (lists of literals); [] is false, [[]] is true."""
    if isinstance(f, Bot):
        return []
    if isinstance(f, Top):
        return [[]]
    if isinstance(f, Or):
        return _dnf(f.left) + _dnf(f.right)
    if isinstance(f, And):
        return [c + d for c in _dnf(f.left) for d in _dnf(f.right)]
    return [[f]]


def _literal(lit: Formula) -> tuple[int, str]:
    """(negation depth, atom name)."""
    depth = 0
    while isinstance(lit, Not):
        depth += 1
        lit = lit.child
    return depth, lit.name


def _split_rule(clause: list, term: list, order) -> NonNestedRule:
    head_pos, head_neg, body_pos, body_neg = set(), set(), set(), set()
    for lit in clause:
        depth, name = _literal(lit)
        (head_pos, head_neg, body_neg)[depth].add(name)
    for lit in term:
        depth, name = _literal(lit)
        (body_pos, body_neg, head_neg)[depth].add(name)
    return NonNestedRule(*(tuple(sorted(s, key=order)) for s in (head_pos, head_neg, body_pos, body_neg)))


def normalize(program: Program) -> Program:
    """Strongly equivalent non-nested program (see the module docstring)."""
    order = program.signature.index
    seen = set()
    rules = []
    for rule in program.rules:
        head = simplify(push_not(rule.head))
        body = simplify(push_not(rule.body))
        for term in _dnf(body):
            for clause in _cnf(head):
                nn = _split_rule(clause, term, order)
                if nn not in seen:
                    seen.add(nn)
                    rules.append(nn)
    return Program(program.signature, tuple(rules))
