"""Syntax objects shared by every engine.

Formulas are immutable trees.  The program connectives are ``Atom``,
``Top``, ``Bot``, ``Not``, ``And`` and ``Or``; the remaining node types
(``Neg``, ``L``, ``M``, ``Implies``, ``Equiv``, ``Arrow``, ``Iff``) only
appear in three-valued theories and in Here-and-There formulas, never inside
rule heads or bodies.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

ATOM_NAME = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Signature:
    """Ordered set of ground atoms; atom ``i`` owns bit ``i`` of every mask."""

    atoms: tuple[str, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        index = {}
        for i, name in enumerate(atoms):
            if name in index:
                raise ValueError(f"duplicate atom {name!r} in signature")
            index[name] = i
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        return self._index[name]

    def extend(self, names: Iterable[str]) -> "Signature":
        extra = [n for n in dict.fromkeys(names) if n not in self._index]
        return Signature(self.atoms + tuple(extra)) if extra else self

    def union(self, other: "Signature") -> "Signature":
        return self.extend(other.atoms)

    def mask(self, atoms: Iterable[str]) -> int:
        m = 0
        for name in atoms:
            m |= 1 << self._index[name]
        return m

    def atoms_of(self, mask: int) -> frozenset:
        return frozenset(a for i, a in enumerate(self.atoms) if mask >> i & 1)


# -- formula nodes -----------------------------------------------------------


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


TOP = Top()
BOT = Bot()


@dataclass(frozen=True)
class Not(Formula):
    """Default negation."""

    child: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Neg(Formula):
    """Strong (Lukasiewicz) negation: value 1 - v."""

    child: Formula


@dataclass(frozen=True)
class L(Formula):
    """'Definitely true': 1 when the child is 1, else 0."""

    child: Formula


@dataclass(frozen=True)
class M(Formula):
    """'Consistent': 1 when the child is not 0, else 0.  Dual of ``L``."""

    child: Formula


@dataclass(frozen=True)
class Implies(Formula):
    """Material implication ``left ⊃ right``, i.e. ``¬left ∨ right``."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Equiv(Formula):
    """Material equivalence ``left ≡ right``."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Arrow(Formula):
    """Rule conditional used as a formula: ``head ← body``."""

    head: Formula
    body: Formula


@dataclass(frozen=True)
class Iff(Formula):
    """``left ↔ right``, i.e. ``(left ← right) ∧ (right ← left)``."""

    left: Formula
    right: Formula


NESTED_TYPES = (Atom, Top, Bot, Not, And, Or)
UNARY_TYPES = (Not, Neg, L, M)
BINARY_TYPES = (And, Or, Implies, Equiv, Iff)

NestedExpr = Union[Atom, Top, Bot, Not, And, Or]


def children(f: Formula) -> tuple:
    if isinstance(f, UNARY_TYPES):
        return (f.child,)
    if isinstance(f, BINARY_TYPES):
        return (f.left, f.right)
    if isinstance(f, Arrow):
        return (f.head, f.body)
    return ()


def is_nested_expr(f: Formula) -> bool:
    """True if ``f`` only uses program connectives."""
    if not isinstance(f, NESTED_TYPES):
        return False
    return all(is_nested_expr(c) for c in children(f))


def atoms(f: Formula) -> list[str]:
    """Atom names of ``f`` in order of first (left-to-right) occurrence."""
    seen = {}
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            seen.setdefault(node.name, None)
        else:
            stack.extend(reversed(children(node)))
    return list(seen)


def conjoin(items: Iterable[Formula]) -> Formula:
    """Left-associated conjunction; ``TOP`` when empty."""
    out = None
    for item in items:
        out = item if out is None else And(out, item)
    return TOP if out is None else out


def disjoin(items: Iterable[Formula]) -> Formula:
    """Left-associated disjunction; ``BOT`` when empty."""
    out = None
    for item in items:
        out = item if out is None else Or(out, item)
    return BOT if out is None else out


def flatten(f: Formula, kind: type) -> list[Formula]:
    """Operands of a maximal ``kind`` (And/Or) chain, left to right."""
    if isinstance(f, kind):
        return flatten(f.left, kind) + flatten(f.right, kind)
    return [f]


# -- rules and programs ------------------------------------------------------


@dataclass(frozen=True)
class Rule:
    head: Formula
    body: Formula = TOP

    def __post_init__(self):
        for part in (self.head, self.body):
            if not is_nested_expr(part):
                raise TypeError(f"rule parts must be nested expressions, got {part!r}")

    def as_formula(self) -> Arrow:
        return Arrow(self.head, self.body)


@dataclass(frozen=True)
class NonNestedRule:
    """``a1;...;am; not b1;...;not bn :- c1,...,cr, not d1,...,not ds``."""

    head_pos: tuple[str, ...] = ()
    head_neg: tuple[str, ...] = ()
    body_pos: tuple[str, ...] = ()
    body_neg: tuple[str, ...] = ()

    def __post_init__(self):
        for slot in ("head_pos", "head_neg", "body_pos", "body_neg"):
            object.__setattr__(self, slot, tuple(getattr(self, slot)))

    def to_rule(self) -> Rule:
        head = disjoin([Atom(a) for a in self.head_pos] + [Not(Atom(b)) for b in self.head_neg])
        body = conjoin([Atom(c) for c in self.body_pos] + [Not(Atom(d)) for d in self.body_neg])
        return Rule(head, body)

    def atoms(self) -> list[str]:
        return list(dict.fromkeys(self.head_pos + self.head_neg + self.body_pos + self.body_neg))


@dataclass(frozen=True)
class Program:
    signature: Signature
    rules: tuple[Rule, ...] = ()

    def __post_init__(self):
        rules = tuple(r.to_rule() if isinstance(r, NonNestedRule) else r for r in self.rules)
        object.__setattr__(self, "rules", rules)
        for rule in rules:
            for name in atoms(rule.as_formula()):
                if name not in self.signature:
                    raise ValueError(f"atom {name!r} is not in the program signature")

    @classmethod
    def from_rules(cls, rules: Iterable, signature: Optional[Signature] = None) -> "Program":
        """Build a program whose signature is ``signature`` extended by the rules' atoms."""
        rules = [r.to_rule() if isinstance(r, NonNestedRule) else r for r in rules]
        sig = signature or Signature()
        for rule in rules:
            sig = sig.extend(atoms(rule.as_formula()))
        return cls(sig, tuple(rules))

    def with_signature(self, signature: Signature) -> "Program":
        return Program(self.signature.union(signature), self.rules)

    def as_formula(self) -> Formula:
        """The program read as the conjunction of its rules."""
        return conjoin(r.as_formula() for r in self.rules)

    def is_non_nested(self) -> bool:
        return all(as_non_nested(r) is not None for r in self.rules)

    def __len__(self) -> int:
        return len(self.rules)


@dataclass(frozen=True)
class Theory:
    """A finite set of arbitrary formulas, read conjunctively."""

    signature: Signature
    formulas: tuple[Formula, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "formulas", tuple(self.formulas))
        for f in self.formulas:
            for name in atoms(f):
                if name not in self.signature:
                    raise ValueError(f"atom {name!r} is not in the theory signature")

    @classmethod
    def from_formulas(cls, formulas: Iterable[Formula], signature: Optional[Signature] = None) -> "Theory":
        formulas = list(formulas)
        sig = signature or Signature()
        for f in formulas:
            sig = sig.extend(atoms(f))
        return cls(sig, tuple(formulas))

    @classmethod
    def from_program(cls, program: Program) -> "Theory":
        return cls(program.signature, tuple(r.as_formula() for r in program.rules))

    def as_formula(self) -> Formula:
        return conjoin(self.formulas)


def as_theory(obj) -> Theory:
    if isinstance(obj, Theory):
        return obj
    if isinstance(obj, Program):
        return Theory.from_program(obj)
    if isinstance(obj, Formula):
        return Theory.from_formulas([obj])
    return Theory.from_formulas(obj)


def _literal_lists(parts: list[Formula]) -> Optional[tuple[list[str], list[str]]]:
    pos, neg = [], []
    for part in parts:
        if isinstance(part, Atom):
            pos.append(part.name)
        elif isinstance(part, Not) and isinstance(part.child, Atom):
            neg.append(part.child.name)
        else:
            return None
    return pos, neg


def as_non_nested(rule: Rule) -> Optional[NonNestedRule]:
    """Decompose ``rule`` into the four literal slots, or None if it is nested."""
    if isinstance(rule, NonNestedRule):
        return rule
    head = [] if isinstance(rule.head, Bot) else flatten(rule.head, Or)
    body = [] if isinstance(rule.body, Top) else flatten(rule.body, And)
    h = _literal_lists(head)
    b = _literal_lists(body)
    if h is None or b is None:
        return None
    return NonNestedRule(h[0], h[1], b[0], b[1])


def classical_sat(interp: Iterable[str], f) -> bool:
    """Two-valued satisfaction of a formula, rule or program.

    ``not`` and ``¬`` are classical negation, ``←`` is material implication,
    and ``L``/``M`` are the identity (every interpretation here is total).
    """
    interp = interp if isinstance(interp, (set, frozenset)) else frozenset(interp)
    if isinstance(f, Program):
        return all(classical_sat(interp, r) for r in f.rules)
    if isinstance(f, NonNestedRule):
        f = f.to_rule()
    if isinstance(f, Rule):
        f = f.as_formula()
    return _csat(interp, f)


def _csat(i, f) -> bool:
    if isinstance(f, Atom):
        return f.name in i
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, (Not, Neg)):
        return not _csat(i, f.child)
    if isinstance(f, (L, M)):
        return _csat(i, f.child)
    if isinstance(f, And):
        return _csat(i, f.left) and _csat(i, f.right)
    if isinstance(f, Or):
        return _csat(i, f.left) or _csat(i, f.right)
    if isinstance(f, Implies):
        return not _csat(i, f.left) or _csat(i, f.right)
    if isinstance(f, Arrow):
        return not _csat(i, f.body) or _csat(i, f.head)
    if isinstance(f, (Equiv, Iff)):
        return _csat(i, f.left) == _csat(i, f.right)
    raise TypeError(f"not a formula: {f!r}")
