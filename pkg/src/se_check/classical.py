"""Reified classical encoding of non-nested programs.

A model of the encoding is a pair ``(proved, assumed)`` of atom sets.  The
first translation reads positive literals in ``proved`` and default literals
against ``assumed``; the second translation reads every literal in
``assumed``.  Circumscription of ``proved`` is computed semantically, as
subset-minimality of ``proved`` with ``assumed`` held fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import kernels
from .bytecode import DEFAULT_CAP_PAIRS, check_size
from .errors import NestedInput
from .semantics import stable_models, union
from .syntax import Atom, NonNestedRule, Program, Rule, Signature, as_non_nested


class Pair(NamedTuple):
    proved: frozenset
    assumed: frozenset

    @property
    def total(self) -> bool:
        return self.proved == self.assumed


def make_pair(proved, assumed) -> Pair:
    return Pair(frozenset(proved), frozenset(assumed))


def _non_nested(rule) -> NonNestedRule:
    nn = as_non_nested(rule)
    if nn is None:
        raise NestedInput("rule is nested; run normalize first")
    return nn


def sat_a(pair: Pair, rule) -> bool:
    """First translation: body over (proved, not assumed), head likewise."""
    r = _non_nested(rule)
    p, a = pair
    body = all(c in p for c in r.body_pos) and all(d not in a for d in r.body_neg)
    head = any(x in p for x in r.head_pos) or any(b not in a for b in r.head_neg)
    return not body or head


def sat_b(pair: Pair, rule) -> bool:
    """Second translation: the rule read classically in ``assumed``."""
    r = _non_nested(rule)
    a = pair.assumed
    body = all(c in a for c in r.body_pos) and all(d not in a for d in r.body_neg)
    head = any(x in a for x in r.head_pos) or any(b not in a for b in r.head_neg)
    return not body or head


def sat_star(pair: Pair, program: Program) -> bool:
    rules = [_non_nested(r) for r in program.rules]
    return (
        all(sat_a(pair, r) for r in rules)
        and all(sat_b(pair, r) for r in rules)
        and pair.proved <= pair.assumed
    )


# -- vectorized model sets ---------------------------------------------------


def rule_masks(program: Program, signature: Optional[Signature] = None):
    """Head/body literal masks of every rule, as four int64 arrays."""
    sig = signature or program.signature
    rows = []
    for rule in program.rules:
        r = _non_nested(rule)
        rows.append((sig.mask(r.head_pos), sig.mask(r.head_neg), sig.mask(r.body_pos), sig.mask(r.body_neg)))
    arr = np.array(rows, dtype=np.int64).reshape(-1, 4)
    return arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]


class _Grid:
    """Boolean model sets over every pair, indexed ``assumed << n | proved``."""

    def __init__(self, program: Program, max_atoms=None):
        self.program = program
        self.signature = program.signature
        self.n = check_size(self.signature, max_atoms, DEFAULT_CAP_PAIRS)
        self.masks = rule_masks(program)
        self.proved, self.assumed = kernels.pair_grid(self.n)

    def totals(self) -> np.ndarray:
        a = kernels.all_masks(self.n)
        return a << self.n | a

    def sat_a(self) -> np.ndarray:
        return kernels.rules_sat(self.proved, self.assumed, *self.masks)

    def sat_b(self) -> np.ndarray:
        return kernels.rules_sat(self.assumed, self.assumed, *self.masks)

    def consistent(self) -> np.ndarray:
        return (self.proved & ~self.assumed) == 0

    def star(self) -> np.ndarray:
        return self.sat_a() & self.sat_b() & self.consistent()

    def subtotal(self) -> np.ndarray:
        sa = self.sat_a()
        total_ok = sa[self.totals()][self.assumed]
        return sa & self.consistent() & total_ok

    def pairs(self, flags: np.ndarray) -> set:
        idx = np.flatnonzero(flags)
        atoms_of = self.signature.atoms_of
        return {Pair(atoms_of(int(self.proved[i])), atoms_of(int(self.assumed[i]))) for i in idx}


def _aligned(p1: Program, p2: Program) -> tuple[Program, Program]:
    sig = p1.signature.union(p2.signature)
    return p1.with_signature(sig), p2.with_signature(sig)


def models_a(program: Program, max_atoms=None) -> set:
    g = _Grid(program, max_atoms)
    return g.pairs(g.sat_a())


def models_b(program: Program, max_atoms=None) -> set:
    g = _Grid(program, max_atoms)
    return g.pairs(g.sat_b())


def models_star(program: Program, max_atoms=None) -> set:
    g = _Grid(program, max_atoms)
    return g.pairs(g.star())


def subtotal_models(program: Program, max_atoms=None) -> set:
    """Consistent first-translation models whose totalization is also a model."""
    g = _Grid(program, max_atoms)
    return g.pairs(g.subtotal())


def stable_models_circ(program: Program, max_atoms=None) -> set:
    """Totals ``(I, I)`` that are minimal in ``proved`` among first-translation models."""
    g = _Grid(program, max_atoms)
    flags = kernels.total_minimal(g.sat_a(), g.n)
    return {g.signature.atoms_of(int(a)) for a in np.flatnonzero(flags)}


def stable_models_star(program: Program, max_atoms=None) -> set:
    """The same minimal-total selection, run over the models of the second translation."""
    g = _Grid(program, max_atoms)
    flags = kernels.total_minimal(g.star(), g.n)
    return {g.signature.atoms_of(int(a)) for a in np.flatnonzero(flags)}


def strongly_equivalent(p1: Program, p2: Program, max_atoms=None) -> bool:
    """Decide strong equivalence by comparing the second-translation model sets."""
    p1, p2 = _aligned(p1, p2)
    return bool(np.array_equal(_Grid(p1, max_atoms).star(), _Grid(p2, max_atoms).star()))


def se_by_subtotal(p1: Program, p2: Program, max_atoms=None) -> bool:
    p1, p2 = _aligned(p1, p2)
    return bool(np.array_equal(_Grid(p1, max_atoms).subtotal(), _Grid(p2, max_atoms).subtotal()))


# -- distinguishing contexts -------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A context program separating two programs, with its provenance.

    ``pair`` is the subtotal model found for program ``holder`` (1 or 2) but
    not for the other one.  ``stable_in`` names the program whose union with
    ``program`` has ``pair.assumed`` as a stable model.
    """

    program: Program
    pair: Pair
    holder: int
    case: int
    stable_in: int
    stable1: frozenset
    stable2: frozenset


def find_witness(p1: Program, p2: Program, max_atoms=None) -> Optional[Witness]:
    p1, p2 = _aligned(p1, p2)
    g1, g2 = _Grid(p1, max_atoms), _Grid(p2, max_atoms)
    sub1, sub2 = g1.subtotal(), g2.subtotal()
    diff = np.flatnonzero(sub1 ^ sub2)
    if diff.size == 0:
        return None
    n = g1.n
    # smallest by proved bit pattern, then assumed
    order = (g1.proved[diff] << n) | g1.assumed[diff]
    idx = int(diff[np.argmin(order)])
    holder = 1 if sub1[idx] else 2
    other_sub = sub2 if holder == 1 else sub1
    sig = p1.signature
    proved_mask, assumed_mask = int(g1.proved[idx]), int(g1.assumed[idx])
    pair = Pair(sig.atoms_of(proved_mask), sig.atoms_of(assumed_mask))

    if not other_sub[assumed_mask << n | assumed_mask]:
        case = 1
        rules = [Rule(Atom(p)) for p in sig.atoms if p in pair.assumed]
        stable_in = holder
    else:
        case = 2
        rules = [Rule(Atom(p)) for p in sig.atoms if p in pair.proved]
        gap = [x for x in sig.atoms if x in pair.assumed and x not in pair.proved]
        rules += [Rule(Atom(p), Atom(q)) for p in gap for q in gap if p != q]
        stable_in = 3 - holder
    context = Program(sig, tuple(rules))

    s1 = stable_models(union(p1, context))
    s2 = stable_models(union(p2, context))
    if s1 == s2:
        raise RuntimeError("witness construction failed to separate the programs")
    return Witness(context, pair, holder, case, stable_in, frozenset(s1), frozenset(s2))


def build_witness(p1: Program, p2: Program, max_atoms=None) -> Optional[Program]:
    """A program whose addition gives ``p1`` and ``p2`` different stable models.

    Returns None when the programs are strongly equivalent.
    """
    w = find_witness(p1, p2, max_atoms)
    return None if w is None else w.program
