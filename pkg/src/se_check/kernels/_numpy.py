"""Pure-numpy kernels.  Same contracts as the numba versions in ``_numba``."""

import numpy as np

from . import ops

_CHUNK = 1 << 20


def rules_sat(pos, neg, head_pos, head_neg, body_pos, body_neg):
    """Satisfaction of every non-nested rule at every world.

    Positive literals are read in ``pos``, default-negated ones in ``neg``.
    Returns a bool array with one entry per world.
    """
    pos = np.asarray(pos, dtype=np.int64)
    neg = np.asarray(neg, dtype=np.int64)
    ok = np.ones(pos.shape[0], dtype=bool)
    for hp, hn, bp, bn in zip(head_pos, head_neg, body_pos, body_neg):
        body = ((bp & ~pos) == 0) & ((bn & neg) == 0)
        head = ((hp & pos) != 0) | ((hn & ~neg) != 0)
        ok &= ~body | head
    return ok


def vm_eval(code, pos, cons):
    pos = np.asarray(pos, dtype=np.int64)
    cons = np.asarray(cons, dtype=np.int64)
    stack = []
    for op, arg in code:
        if op == ops.ATOM:
            v = np.where((pos >> arg) & 1, 2, np.where((cons >> arg) & 1, 1, 0)).astype(np.int8)
            stack.append(v)
        elif op == ops.TOP:
            stack.append(np.full(pos.shape[0], 2, dtype=np.int8))
        elif op == ops.BOT:
            stack.append(np.zeros(pos.shape[0], dtype=np.int8))
        elif op in (ops.NEG, ops.L, ops.M, ops.NOT):
            x = stack.pop()
            if op == ops.NEG:
                stack.append((2 - x).astype(np.int8))
            elif op == ops.L:
                stack.append(np.where(x == 2, 2, 0).astype(np.int8))
            elif op == ops.M:
                stack.append(np.where(x != 0, 2, 0).astype(np.int8))
            else:
                stack.append(np.where(x == 0, 2, 0).astype(np.int8))
        else:
            y = stack.pop()
            x = stack.pop()
            if op == ops.AND:
                r = np.minimum(x, y)
            elif op == ops.OR:
                r = np.maximum(x, y)
            elif op == ops.IMPLIES:
                r = np.maximum(2 - x, y)
            elif op == ops.EQUIV:
                r = np.minimum(np.maximum(2 - x, y), np.maximum(2 - y, x))
            elif op == ops.ARROW_L3:
                r = np.where(x <= y, 2, 0)
            elif op == ops.IFF:
                r = np.where(x == y, 2, 0)
            elif op == ops.ARROW_HT:
                r = np.where(x <= y, 2, y)
            else:
                raise ValueError(f"bad opcode {op}")
            stack.append(r.astype(np.int8))
    if len(stack) != 1:
        raise ValueError("malformed bytecode")
    return stack[0]


def antichain_minimal(masks):
    """Flag the elements of ``masks`` with no strict subset among ``masks``."""
    masks = np.asarray(masks, dtype=np.int64)
    out = np.empty(masks.shape[0], dtype=bool)
    step = max(1, _CHUNK // max(1, masks.shape[0]))
    for lo in range(0, masks.shape[0], step):
        row = masks[lo:lo + step, None]
        strict_sub = ((masks[None, :] & ~row) == 0) & (masks[None, :] != row)
        out[lo:lo + step] = ~strict_sub.any(axis=1)
    return out


def total_minimal(sat, n):
    """Totals ``(A, A)`` that hold and admit no held ``(J, A)`` with ``J`` a strict subset of ``A``.

    ``sat`` is indexed by ``A << n | J``.  Returns a bool array over ``A``.
    """
    size = 1 << n
    grid = np.asarray(sat, dtype=bool).reshape(size, size)
    universe = np.arange(size, dtype=np.int64)
    out = np.empty(size, dtype=bool)
    step = max(1, _CHUNK // size)
    for lo in range(0, size, step):
        a = universe[lo:lo + step, None]
        strict_sub = ((universe[None, :] & ~a) == 0) & (universe[None, :] != a)
        beaten = (grid[lo:lo + step] & strict_sub).any(axis=1)
        total = grid[universe[lo:lo + step], universe[lo:lo + step]]
        out[lo:lo + step] = total & ~beaten
    return out
