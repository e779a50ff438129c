"""Enumeration kernels with a numba path and a pure-numpy fallback.

The backend is picked once at import time from ``SE_CHECK_KERNELS``
(``numba`` or ``numpy``).  Without the variable, numba is used when it
imports cleanly.  Both backends are always importable as ``numpy_backend``
and (when available) ``numba_backend`` for cross-checking and benchmarks.
"""

import logging
import os

import numpy as np

from . import _numpy as numpy_backend
from . import ops

log = logging.getLogger(__name__)

try:
    from . import _numba as numba_backend
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_backend = None


def _select():
    wanted = os.environ.get("SE_CHECK_KERNELS", "").strip().lower()
    if wanted == "numpy":
        return "numpy", numpy_backend
    if wanted not in ("", "numba"):
        raise ValueError(f"SE_CHECK_KERNELS must be 'numba' or 'numpy', got {wanted!r}")
    if numba_backend is None:
        if wanted == "numba":
            log.warning("numba is unavailable; falling back to numpy kernels")
        return "numpy", numpy_backend
    return "numba", numba_backend


BACKEND, _impl = _select()

rules_sat = _impl.rules_sat
vm_eval = _impl.vm_eval
antichain_minimal = _impl.antichain_minimal
total_minimal = _impl.total_minimal


def all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def pair_grid(n: int):
    """All ``4**n`` pairs as ``(first, second)`` masks, index ``second << n | first``."""
    idx = np.arange(1 << (2 * n), dtype=np.int64)
    return idx & ((1 << n) - 1), idx >> n


def submasks(mask: int) -> np.ndarray:
    """Every subset of ``mask``, as an int64 array."""
    out = np.zeros(1, dtype=np.int64)
    bit = 0
    while mask >> bit:
        if mask >> bit & 1:
            out = np.concatenate([out, out | (1 << bit)])
        bit += 1
    return out


__all__ = [
    "BACKEND",
    "ops",
    "numpy_backend",
    "numba_backend",
    "rules_sat",
    "vm_eval",
    "antichain_minimal",
    "total_minimal",
    "all_masks",
    "pair_grid",
    "submasks",
]
