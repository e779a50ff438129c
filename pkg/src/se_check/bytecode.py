"""Formula compilation to kernel bytecode, and enumeration caps."""

from __future__ import annotations

import numpy as np

from .errors import SignatureTooLarge, UnsupportedOperator
from .kernels import ops
from .syntax import (
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
    Signature,
    Top,
)

# 2**n paths (classical interpretations) and 3**n / 4**n paths (pairs)
DEFAULT_CAP_SETS = 16
DEFAULT_CAP_PAIRS = 10


def check_size(signature: Signature, max_atoms, default: int) -> int:
    cap = default if max_atoms is None else max_atoms
    if len(signature) > cap:
        raise SignatureTooLarge(len(signature), cap)
    return len(signature)


_UNARY = {Neg: ops.NEG, L: ops.L, M: ops.M, Not: ops.NOT}
_BINARY = {And: ops.AND, Or: ops.OR, Implies: ops.IMPLIES, Equiv: ops.EQUIV, Iff: ops.IFF}
_HT_ALLOWED = (Atom, Top, Bot, Not, And, Or, Arrow)


def compile_formula(f: Formula, signature: Signature, logic: str = "l3") -> np.ndarray:
    """Postfix bytecode for ``f``.

    ``logic="l3"`` uses the three-valued conditional (0 when body > head);
    ``logic="ht"`` uses the Here-and-There conditional (head value when
    body > head) and rejects the three-valued-only connectives.
    """
    if logic not in ("l3", "ht"):
        raise ValueError(f"unknown logic {logic!r}")
    code = []
    stack = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if logic == "ht" and not isinstance(node, _HT_ALLOWED):
            raise UnsupportedOperator(f"{type(node).__name__} has no Here-and-There reading here")
        if isinstance(node, Atom):
            code.append((ops.ATOM, signature.index(node.name)))
        elif isinstance(node, Top):
            code.append((ops.TOP, 0))
        elif isinstance(node, Bot):
            code.append((ops.BOT, 0))
        elif expanded:
            if isinstance(node, Arrow):
                code.append((ops.ARROW_L3 if logic == "l3" else ops.ARROW_HT, 0))
            elif logic == "ht" and isinstance(node, Not):
                # not F is read as false <- F
                code.append((ops.BOT, 0))
                code.append((ops.ARROW_HT, 0))
            elif type(node) in _UNARY:
                code.append((_UNARY[type(node)], 0))
            else:
                code.append((_BINARY[type(node)], 0))
        else:
            stack.append((node, True))
            if isinstance(node, Arrow):
                # body is pushed first, head second
                stack.append((node.head, False))
                stack.append((node.body, False))
            elif type(node) in _UNARY:
                stack.append((node.child, False))
            elif type(node) in _BINARY:
                stack.append((node.right, False))
                stack.append((node.left, False))
            else:
                raise TypeError(f"not a formula: {node!r}")
    return np.array(code, dtype=np.int64).reshape(-1, 2)
