"""Here-and-There models and equilibrium models.

Satisfaction at a pair ``(here, there)`` with ``here ⊆ there``: atoms hold
when they are in ``here``; ``,`` and ``;`` are pointwise; ``G <- F`` holds
when F implies G at the pair and F implies G classically in ``there``;
``not F`` is ``false <- F``.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .bytecode import DEFAULT_CAP_PAIRS, check_size, compile_formula
from .classical import Pair
from .errors import UnsupportedOperator
from .syntax import (
    BOT,
    And,
    Arrow,
    Atom,
    Bot,
    Not,
    Or,
    Program,
    Rule,
    Theory,
    Top,
    as_theory,
    classical_sat,
)

HTPair = Pair


def ht_sat(pair: Pair, f) -> bool:
    """Here-and-There satisfaction of a formula, rule, program or theory."""
    here, there = frozenset(pair[0]), frozenset(pair[1])
    if not here <= there:
        raise ValueError("here world must be a subset of the there world")
    if isinstance(f, Rule):
        f = f.as_formula()
    elif isinstance(f, (Program, Theory)):
        return all(_sat(here, there, g) for g in as_theory(f).formulas)
    return _sat(here, there, f)


def _sat(here, there, f) -> bool:
    if isinstance(f, Atom):
        return f.name in here
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return _sat(here, there, f.left) and _sat(here, there, f.right)
    if isinstance(f, Or):
        return _sat(here, there, f.left) or _sat(here, there, f.right)
    if isinstance(f, Not):
        return _sat(here, there, Arrow(BOT, f.child))
    if isinstance(f, Arrow):
        here_ok = not _sat(here, there, f.body) or _sat(here, there, f.head)
        there_ok = not classical_sat(there, f.body) or classical_sat(there, f.head)
        return here_ok and there_ok
    raise UnsupportedOperator(f"{type(f).__name__} has no Here-and-There reading here")


def _sat_grid(theory: Theory, max_atoms):
    sig = theory.signature
    n = check_size(sig, max_atoms, DEFAULT_CAP_PAIRS)
    here, there = kernels.pair_grid(n)
    code = compile_formula(theory.as_formula(), sig, "ht")
    ok = ((here & ~there) == 0) & (kernels.vm_eval(code, here, there) == 2)
    return n, here, there, ok


def ht_models(theory, max_atoms=None) -> set:
    theory = as_theory(theory)
    _, here, there, ok = _sat_grid(theory, max_atoms)
    atoms_of = theory.signature.atoms_of
    return {Pair(atoms_of(int(h)), atoms_of(int(t))) for h, t in zip(here[ok], there[ok])}


def ht_equilibrium(theory, max_atoms=None) -> set:
    """Sets I with (I, I) an HT model and no HT model (J, I) for J a strict subset of I."""
    theory = as_theory(theory)
    n, _, _, ok = _sat_grid(theory, max_atoms)
    flags = kernels.total_minimal(ok, n)
    return {theory.signature.atoms_of(int(i)) for i in np.flatnonzero(flags)}


def ht_equivalent(t1, t2, max_atoms=None) -> bool:
    """Same HT models over the joint signature."""
    t1, t2 = as_theory(t1), as_theory(t2)
    sig = t1.signature.union(t2.signature)
    t1, t2 = Theory(sig, t1.formulas), Theory(sig, t2.formulas)
    return bool(np.array_equal(_sat_grid(t1, max_atoms)[3], _sat_grid(t2, max_atoms)[3]))
