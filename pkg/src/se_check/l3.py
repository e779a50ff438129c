"""Three-valued Lukasiewicz logic with the ``L`` ("definitely true") operator.

An interpretation is a consistent pair ``(proved, assumed)``: atoms in
``proved`` are true, atoms outside ``assumed`` are false, and the rest are
unknown.  Values are :class:`TriValue` members (0, 1/2, 1 scaled by two).
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction

import numpy as np

from . import kernels
from .bytecode import DEFAULT_CAP_PAIRS, check_size, compile_formula
from .classical import Pair
from .errors import SchemaMismatch
from .normal_form import normalize  # noqa: F401  (re-exported)
from .syntax import (
    BOT,
    TOP,
    And,
    Arrow,
    Atom,
    Bot,
    Equiv,
    Formula,
    Iff,
    Implies,
    L,
    M,
    Neg,
    Not,
    Or,
    Program,
    Rule,
    Signature,
    Theory,
    Top,
    as_theory,
    atoms,
    conjoin,
)


class TriValue(IntEnum):
    FALSE = 0
    UNKNOWN = 1
    TRUE = 2

    @property
    def fraction(self) -> Fraction:
        return Fraction(int(self), 2)

    def __str__(self):
        return {0: "0", 1: "1/2", 2: "1"}[int(self)]


F0, HALF, T1 = TriValue.FALSE, TriValue.UNKNOWN, TriValue.TRUE


def _check_consistent(m: Pair):
    if not m.proved <= m.assumed:
        raise ValueError(f"inconsistent interpretation: {sorted(m.proved - m.assumed)} true but not consistent")


def eval(m: Pair, f) -> TriValue:  # noqa: A001 - mirrors the valuation function
    """Valuation of ``f`` (a formula, rule or program) at the interpretation ``m``."""
    m = Pair(frozenset(m[0]), frozenset(m[1]))
    _check_consistent(m)
    if isinstance(f, Rule):
        f = f.as_formula()
    elif isinstance(f, (Program, Theory)):
        f = as_theory(f).as_formula()
    return _eval(m.proved, m.assumed, f)


def _eval(p, a, f) -> TriValue:
    if isinstance(f, Atom):
        return T1 if f.name in p else (HALF if f.name in a else F0)
    if isinstance(f, Top):
        return T1
    if isinstance(f, Bot):
        return F0
    if isinstance(f, Neg):
        return TriValue(2 - _eval(p, a, f.child))
    if isinstance(f, L):
        return T1 if _eval(p, a, f.child) == T1 else F0
    if isinstance(f, M):
        return T1 if _eval(p, a, f.child) != F0 else F0
    if isinstance(f, Not):
        return T1 if _eval(p, a, f.child) == F0 else F0
    if isinstance(f, Arrow):
        return T1 if _eval(p, a, f.body) <= _eval(p, a, f.head) else F0
    x = _eval(p, a, f.left)
    y = _eval(p, a, f.right)
    if isinstance(f, And):
        return min(x, y)
    if isinstance(f, Or):
        return max(x, y)
    if isinstance(f, Implies):
        return max(TriValue(2 - x), y)
    if isinstance(f, Equiv):
        return min(max(TriValue(2 - x), y), max(TriValue(2 - y), x))
    if isinstance(f, Iff):
        return T1 if x == y else F0
    raise TypeError(f"not a formula: {f!r}")


def unfold(f: Formula) -> Formula:
    """Rewrite every derived connective into ``¬``, ``∨``, ``L``, atoms and constants."""
    if isinstance(f, (Atom, Top, Bot)):
        return f
    if isinstance(f, Neg):
        return Neg(unfold(f.child))
    if isinstance(f, L):
        return L(unfold(f.child))
    if isinstance(f, M):
        return _m(unfold(f.child))
    if isinstance(f, Not):
        return Neg(_m(unfold(f.child)))
    if isinstance(f, Arrow):
        g, h = unfold(f.head), unfold(f.body)
        return _and(_implies(L(h), L(g)), _implies(_m(h), _m(g)))
    x, y = unfold(f.left), unfold(f.right)
    if isinstance(f, Or):
        return Or(x, y)
    if isinstance(f, And):
        return _and(x, y)
    if isinstance(f, Implies):
        return _implies(x, y)
    if isinstance(f, Equiv):
        return _and(_implies(x, y), _implies(y, x))
    if isinstance(f, Iff):
        return unfold(And(Arrow(f.left, f.right), Arrow(f.right, f.left)))
    raise TypeError(f"not a formula: {f!r}")


def _m(f):
    return Neg(L(Neg(f)))


def _and(x, y):
    return Neg(Or(Neg(x), Neg(y)))


def _implies(x, y):
    return Or(Neg(x), y)


# -- enumeration -------------------------------------------------------------


def _consistent_pairs(sig: Signature, max_atoms):
    n = check_size(sig, max_atoms, DEFAULT_CAP_PAIRS)
    proved, assumed = kernels.pair_grid(n)
    keep = (proved & ~assumed) == 0
    return n, proved[keep], assumed[keep]


def _values(f: Formula, sig: Signature, proved, assumed) -> np.ndarray:
    return kernels.vm_eval(compile_formula(f, sig, "l3"), proved, assumed)


def l3_tautology(f: Formula, signature: Signature | None = None, max_atoms=None) -> bool:
    """True iff ``f`` takes value 1 under every consistent interpretation."""
    sig = (signature or Signature()).extend(atoms(f))
    _, proved, assumed = _consistent_pairs(sig, max_atoms)
    return bool((_values(f, sig, proved, assumed) == 2).all())


def l3_models(program, max_atoms=None) -> set:
    """Consistent pairs at which ``L`` of the whole program (or theory) is 1."""
    theory = as_theory(program)
    sig = theory.signature
    _, proved, assumed = _consistent_pairs(sig, max_atoms)
    hits = _values(L(theory.as_formula()), sig, proved, assumed) == 2
    return {Pair(sig.atoms_of(int(p)), sig.atoms_of(int(a))) for p, a in zip(proved[hits], assumed[hits])}


def strongly_equivalent_l3(p1, p2, max_atoms=None) -> bool:
    """``L p1 ≡ L p2`` holds at every consistent interpretation."""
    t1, t2 = as_theory(p1), as_theory(p2)
    sig = t1.signature.union(t2.signature)
    _, proved, assumed = _consistent_pairs(sig, max_atoms)
    v1 = _values(L(t1.as_formula()), sig, proved, assumed) == 2
    v2 = _values(L(t2.as_formula()), sig, proved, assumed) == 2
    return bool(np.array_equal(v1, v2))


def l3_stable_models(theory, max_atoms=None) -> set:
    """Sets I with (I, I) a model and no model (J, I) for J a strict subset of I."""
    theory = as_theory(theory)
    sig = theory.signature
    n = check_size(sig, max_atoms, DEFAULT_CAP_PAIRS)
    proved, assumed = kernels.pair_grid(n)
    consistent = (proved & ~assumed) == 0
    sat = consistent & (_values(L(theory.as_formula()), sig, proved, assumed) == 2)
    flags = kernels.total_minimal(sat, n)
    return {sig.atoms_of(int(i)) for i in np.flatnonzero(flags)}


# -- transformation schemas --------------------------------------------------

ROMAN = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii")
RULE_LEVEL = frozenset({"ix", "x", "xi", "xii"})


def _image(index: str, f: Formula) -> list:
    """Right-hand sides the schema ``index`` rewrites ``f`` into (left to right)."""
    out = []
    if index == "i" and isinstance(f, (And, Or)):
        out.append(type(f)(f.right, f.left))
    elif index == "ii" and isinstance(f, (And, Or)) and type(f.left) is type(f):
        kind = type(f)
        out.append(kind(f.left.left, kind(f.left.right, f.right)))
    elif index == "iii":
        if isinstance(f, And) and isinstance(f.right, Or):
            out.append(Or(And(f.left, f.right.left), And(f.left, f.right.right)))
        if isinstance(f, Or) and isinstance(f.right, And):
            out.append(And(Or(f.left, f.right.left), Or(f.left, f.right.right)))
    elif index == "iv" and isinstance(f, Not):
        c = f.child
        if isinstance(c, Or):
            out.append(And(Not(c.left), Not(c.right)))
        if isinstance(c, And):
            out.append(Or(Not(c.left), Not(c.right)))
    elif index == "v":
        if isinstance(f, Not) and isinstance(f.child, Not) and isinstance(f.child.child, Not):
            out.append(f.child.child)
    elif index == "vi" and isinstance(f, (And, Or)) and isinstance(f.right, Top):
        out.append(f.left if isinstance(f, And) else TOP)
    elif index == "vii" and isinstance(f, (And, Or)) and isinstance(f.right, Bot):
        out.append(BOT if isinstance(f, And) else f.left)
    elif index == "viii" and isinstance(f, Not) and isinstance(f.child, (Top, Bot)):
        out.append(BOT if isinstance(f.child, Top) else TOP)
    elif index == "ix" and isinstance(f, Arrow) and isinstance(f.head, And):
        out.append(And(Arrow(f.head.left, f.body), Arrow(f.head.right, f.body)))
    elif index == "x" and isinstance(f, Arrow) and isinstance(f.body, Or):
        out.append(And(Arrow(f.head, f.body.left), Arrow(f.head, f.body.right)))
    elif index == "xi" and isinstance(f, Arrow) and isinstance(f.body, And):
        nn = f.body.right
        if isinstance(nn, Not) and isinstance(nn.child, Not):
            out.append(Arrow(Or(f.head, Not(nn.child.child)), f.body.left))
    elif index == "xii" and isinstance(f, Arrow) and isinstance(f.head, Or):
        nn = f.head.right
        if isinstance(nn, Not) and isinstance(nn.child, Not):
            out.append(Arrow(f.head.left, And(Not(nn.child.child), f.body)))
    return out


def _as_formula(x) -> Formula:
    if isinstance(x, Rule):
        return x.as_formula()
    if isinstance(x, (list, tuple)):
        return conjoin(_as_formula(r) for r in x)
    if isinstance(x, (Program, Theory)):
        return as_theory(x).as_formula()
    return x


def _roman(index) -> str:
    if isinstance(index, int):
        if not 1 <= index <= 12:
            raise ValueError(f"transformation index out of range: {index}")
        return ROMAN[index - 1]
    index = str(index).strip("() ").lower()
    if index not in ROMAN:
        raise ValueError(f"unknown transformation {index!r}")
    return index


def check_transformation(index, lhs, rhs, max_atoms=None) -> bool:
    """Check one instance of a rewriting schema for three-valued equivalence.

    ``lhs``/``rhs`` may be formulas, rules, or lists of rules (read as a
    conjunction).  Raises SchemaMismatch when they do not instantiate the
    schema in either direction.
    """
    index = _roman(index)
    lhs, rhs = _as_formula(lhs), _as_formula(rhs)
    if rhs not in _image(index, lhs) and lhs not in _image(index, rhs):
        raise SchemaMismatch(f"formulas do not instantiate transformation ({index})")
    if index in RULE_LEVEL:
        return l3_tautology(Equiv(L(lhs), L(rhs)), max_atoms=max_atoms)
    return l3_tautology(Iff(lhs, rhs), max_atoms=max_atoms)
