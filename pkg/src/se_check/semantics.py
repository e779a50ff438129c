"""Stable models by reduct and minimal-model enumeration."""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

import numpy as np

from . import kernels
from .kernels import ops
from .bytecode import DEFAULT_CAP_SETS, check_size, compile_formula
from .parser import format_rule
from .syntax import (
    BOT,
    TOP,
    Arrow,
    Atom,
    NonNestedRule,
    Not,
    Program,
    Rule,
    Signature,
    children,
    as_non_nested,
    classical_sat,
)

Interp = frozenset


def _replace_maximal_not(f, decide):
    if isinstance(f, Not):
        return decide(f.child)
    kids = children(f)
    if not kids:
        return f
    return type(f)(*(_replace_maximal_not(k, decide) for k in kids))


def reduct(program: Program, context) -> Program:
    """Replace every maximal ``not F`` by false when ``context`` satisfies F, else by true."""
    context = frozenset(context)

    def decide(inner):
        return BOT if classical_sat(context, inner) else TOP

    rules = tuple(
        Rule(_replace_maximal_not(r.head, decide), _replace_maximal_not(r.body, decide))
        for r in program.rules
    )
    return Program(program.signature, rules)


def reduct_literal(program: Program, context) -> Program:
    """Reduct that only rewrites default literals ``not p`` (atom ``p``).

    Any other ``not`` is left in place, so this matches :func:`reduct`
    exactly on non-nested programs.
    """
    context = frozenset(context)

    def walk(f):
        if isinstance(f, Not) and isinstance(f.child, Atom):
            return BOT if f.child.name in context else TOP
        kids = children(f)
        if not kids:
            return f
        return type(f)(*(walk(k) for k in kids))

    return Program(program.signature, tuple(Rule(walk(r.head), walk(r.body)) for r in program.rules))


def _has_not(f) -> bool:
    return isinstance(f, Not) or any(_has_not(k) for k in children(f))


def _models_mask(program: Program, masks: np.ndarray) -> np.ndarray:
    code = compile_formula(program.as_formula(), program.signature)
    return kernels.vm_eval(code, masks, masks) == 2


def classical_models(program: Program, max_atoms=None) -> set:
    """Every interpretation satisfying the program read classically."""
    n = check_size(program.signature, max_atoms, DEFAULT_CAP_SETS)
    masks = kernels.all_masks(n)
    hits = masks[_models_mask(program, masks)]
    return {program.signature.atoms_of(int(m)) for m in hits}


def minimal_models(program: Program, max_atoms=None) -> set:
    """Subset-minimal classical models of a negation-free program."""
    if any(_has_not(r.head) or _has_not(r.body) for r in program.rules):
        raise ValueError("minimal_models requires a negation-free program (take a reduct first)")
    n = check_size(program.signature, max_atoms, DEFAULT_CAP_SETS)
    masks = kernels.all_masks(n)
    models = masks[_models_mask(program, masks)]
    keep = kernels.antichain_minimal(models)
    return {program.signature.atoms_of(int(m)) for m in models[keep]}


@lru_cache(maxsize=65536)
def _reduced_rule_code(rule: Rule, interp: frozenset, signature: Signature) -> np.ndarray:
    def decide(inner):
        return BOT if classical_sat(interp, inner) else TOP

    head = _replace_maximal_not(rule.head, decide)
    body = _replace_maximal_not(rule.body, decide)
    return compile_formula(Arrow(head, body), signature)


_AND_ROW = np.array([[ops.AND, 0]], dtype=np.int64)
_TOP_CODE = np.array([[ops.TOP, 0]], dtype=np.int64)


def _reduct_code(program: Program, interp: frozenset) -> np.ndarray:
    """Bytecode of the reduct's conjunction, assembled from cached per-rule pieces."""
    if not program.rules:
        return _TOP_CODE
    parts = []
    for k, rule in enumerate(program.rules):
        parts.append(_reduced_rule_code(rule, interp, program.signature))
        if k:
            parts.append(_AND_ROW)
    return np.concatenate(parts)


# largest signature for which the non-nested path builds the full (J, I) grid
_GRID_ATOMS = 8


def _stable_non_nested(program: Program, n: int) -> np.ndarray:
    """Stable-model flags per interpretation mask, for non-nested programs.

    Under I a rule survives the reduct when no ``not d`` in its body has d in
    I and every ``not b`` in its head has b in I; what survives is the
    positive rule ``head_pos <- body_pos``, checked at every J.
    """
    sig = program.signature
    rows = [as_non_nested(r) for r in program.rules]
    hp, hn, bp, bn = (
        np.array([sig.mask(getattr(r, f)) for r in rows], dtype=np.int64)[:, None]
        for f in ("head_pos", "head_neg", "body_pos", "body_neg")
    )
    j, i = kernels.pair_grid(n)
    kept = ((bn & i) == 0) & ((hn & ~i) == 0)
    holds = ((bp & ~j) != 0) | ((hp & j) != 0)
    models = (~kept | holds).all(axis=0) & ((j & ~i) == 0)
    return kernels.total_minimal(models, n)


def stable_models(program: Program, max_atoms=None) -> set:
    """All I such that I is a minimal model of the reduct of ``program`` by I."""
    sig = program.signature
    n = check_size(sig, max_atoms, DEFAULT_CAP_SETS)
    if program.rules and n <= _GRID_ATOMS and program.is_non_nested():
        flags = _stable_non_nested(program, n)
        return {sig.atoms_of(int(i)) for i in np.flatnonzero(flags)}
    out = set()
    for i in range(1 << n):
        interp = sig.atoms_of(i)
        code = _reduct_code(program, interp)
        # I is a minimal model iff it is a model and no strict subset is one
        subs = kernels.submasks(i)
        vals = kernels.vm_eval(code, subs, subs) == 2
        if vals[-1] and not vals[:-1].any():
            out.add(interp)
    return out


def union(p1: Program, p2: Program) -> Program:
    """Rules of both programs, p1 first, without duplicate rules."""
    seen = set()
    rules = []
    for rule in p1.rules + p2.rules:
        key = format_rule(rule)
        if key not in seen:
            seen.add(key)
            rules.append(rule)
    return Program(p1.signature.union(p2.signature), tuple(rules))


# -- randomized falsifier ----------------------------------------------------


def random_rule(rng: np.random.Generator, signature: Signature) -> NonNestedRule:
    """Each atom lands in each of the four literal slots with probability 1/4.

    Draws where an atom is both a positive and a negative body literal are
    rejected and redrawn.
    """
    n = len(signature)
    while True:
        pick = rng.random((4, n)) < 0.25
        if n and (pick[2] & pick[3]).any():
            continue
        slots = [tuple(a for a, hit in zip(signature.atoms, row) if hit) for row in pick]
        return NonNestedRule(*slots)


def random_program(rng: np.random.Generator, signature: Signature, max_rules: int) -> Program:
    count = int(rng.integers(0, max_rules + 1))
    return Program(signature, tuple(random_rule(rng, signature) for _ in range(count)))


def sample_refute_se(
    p1: Program,
    p2: Program,
    max_rules: int,
    trials: int,
    seed: int,
    max_atoms=None,
) -> Optional[Program]:
    """Search random context programs for one that separates ``p1`` and ``p2``.

    Returns the first context found, or None.  None does not prove strong
    equivalence.
    """
    if max_rules < 0:
        raise ValueError("max_rules must be non-negative")
    sig = p1.signature.union(p2.signature)
    p1, p2 = p1.with_signature(sig), p2.with_signature(sig)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        context = random_program(rng, sig, max_rules)
        if stable_models(union(p1, context), max_atoms) != stable_models(union(p2, context), max_atoms):
            return context
    return None
