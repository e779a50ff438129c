"""numba-compiled kernels.  Contracts match ``_numpy``."""

import numpy as np
from numba import njit

from . import ops

_ATOM = ops.ATOM
_TOP = ops.TOP
_BOT = ops.BOT
_NEG = ops.NEG
_AND = ops.AND
_OR = ops.OR
_L = ops.L
_M = ops.M
_NOT = ops.NOT
_IMPLIES = ops.IMPLIES
_EQUIV = ops.EQUIV
_ARROW_L3 = ops.ARROW_L3
_IFF = ops.IFF
_ARROW_HT = ops.ARROW_HT


@njit(cache=True)
def _rules_sat(pos, neg, head_pos, head_neg, body_pos, body_neg):
    k = pos.shape[0]
    out = np.ones(k, dtype=np.bool_)
    for w in range(k):
        p = pos[w]
        a = neg[w]
        for r in range(head_pos.shape[0]):
            if (body_pos[r] & ~p) == 0 and (body_neg[r] & a) == 0:
                if (head_pos[r] & p) == 0 and (head_neg[r] & ~a) == 0:
                    out[w] = False
                    break
    return out


def rules_sat(pos, neg, head_pos, head_neg, body_pos, body_neg):
    return _rules_sat(
        np.ascontiguousarray(pos, dtype=np.int64),
        np.ascontiguousarray(neg, dtype=np.int64),
        np.ascontiguousarray(head_pos, dtype=np.int64),
        np.ascontiguousarray(head_neg, dtype=np.int64),
        np.ascontiguousarray(body_pos, dtype=np.int64),
        np.ascontiguousarray(body_neg, dtype=np.int64),
    )


_CHUNK = 512


@njit(cache=True)
def _max_depth(code):
    depth = 0
    top = 0
    for i in range(code.shape[0]):
        op = code[i, 0]
        if op == _ATOM or op == _TOP or op == _BOT:
            depth += 1
        elif not (op == _NEG or op == _L or op == _M or op == _NOT):
            depth -= 1
        top = max(top, depth)
    return top


@njit(cache=True)
def _vm_eval(code, pos, cons):
    # opcode-major over fixed chunks: one dispatch per op per chunk, and the
    # inner loops are branch-light enough to vectorize
    k = pos.shape[0]
    out = np.empty(k, dtype=np.int8)
    stack = np.empty((_max_depth(code) + 1, _CHUNK), dtype=np.int8)
    for start in range(0, k, _CHUNK):
        m = min(_CHUNK, k - start)
        sp = 0
        for i in range(code.shape[0]):
            op = code[i, 0]
            if op == _ATOM:
                bit = code[i, 1]
                row = stack[sp]
                for w in range(m):
                    # proved wins over assumed, as in the numpy backend
                    pb = (pos[start + w] >> bit) & 1
                    cb = (cons[start + w] >> bit) & 1
                    row[w] = 2 * pb + cb * (1 - pb)
                sp += 1
            elif op == _TOP:
                stack[sp, :m] = 2
                sp += 1
            elif op == _BOT:
                stack[sp, :m] = 0
                sp += 1
            elif op == _NEG or op == _L or op == _M or op == _NOT:
                row = stack[sp - 1]
                for w in range(m):
                    v = row[w]
                    if op == _NEG:
                        row[w] = 2 - v
                    elif op == _L:
                        row[w] = 2 if v == 2 else 0
                    elif op == _M:
                        row[w] = 2 if v != 0 else 0
                    else:
                        row[w] = 2 if v == 0 else 0
            else:
                xs = stack[sp - 2]
                ys = stack[sp - 1]
                sp -= 1
                for w in range(m):
                    x = xs[w]
                    y = ys[w]
                    if op == _AND:
                        r = min(x, y)
                    elif op == _OR:
                        r = max(x, y)
                    elif op == _IMPLIES:
                        r = max(2 - x, y)
                    elif op == _EQUIV:
                        r = min(max(2 - x, y), max(2 - y, x))
                    elif op == _ARROW_L3:
                        r = 2 if x <= y else 0
                    elif op == _IFF:
                        r = 2 if x == y else 0
                    else:
                        r = 2 if x <= y else y
                    xs[w] = r
        out[start:start + m] = stack[0, :m]
    return out


def vm_eval(code, pos, cons):
    code = np.ascontiguousarray(code, dtype=np.int64).reshape(-1, 2)
    return _vm_eval(
        code,
        np.ascontiguousarray(pos, dtype=np.int64),
        np.ascontiguousarray(cons, dtype=np.int64),
    )


@njit(cache=True)
def _antichain_minimal(masks):
    k = masks.shape[0]
    out = np.ones(k, dtype=np.bool_)
    for i in range(k):
        mi = masks[i]
        for j in range(k):
            mj = masks[j]
            if mj != mi and (mj & ~mi) == 0:
                out[i] = False
                break
    return out


def antichain_minimal(masks):
    return _antichain_minimal(np.ascontiguousarray(masks, dtype=np.int64))


@njit(cache=True)
def _total_minimal(sat, n):
    size = 1 << n
    out = np.zeros(size, dtype=np.bool_)
    for a in range(size):
        base = a << n
        if not sat[base | a]:
            continue
        ok = True
        # walk every strict submask of a, ending with 0
        j = (a - 1) & a
        while a != 0:
            if sat[base | j]:
                ok = False
                break
            if j == 0:
                break
            j = (j - 1) & a
        out[a] = ok
    return out


def total_minimal(sat, n):
    return _total_minimal(np.ascontiguousarray(sat, dtype=np.bool_), n)
