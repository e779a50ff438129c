"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py --atoms 6 8 10 --repeat 5

Every kernel runs on the same inputs under both backends; outputs are
compared before timing so a fast wrong answer cannot win.
"""

import argparse
import sys
import timeit

import numpy as np

from se_check import kernels
from se_check.bytecode import compile_formula
from se_check.classical import rule_masks
from se_check.semantics import random_program
from se_check.syntax import Signature


def workloads(n, rng):
    """(name, args) for each kernel over an ``n``-atom signature."""
    sig = Signature(tuple(f"x{i}" for i in range(n)))
    prog = random_program(rng, sig, 3 * n)
    while not prog.rules:
        prog = random_program(rng, sig, 3 * n)
    proved, assumed = kernels.pair_grid(n)
    masks = rule_masks(prog)
    code = compile_formula(prog.as_formula(), sig)
    sat = kernels.numpy_backend.rules_sat(proved, assumed, *masks)
    models = np.flatnonzero(kernels.numpy_backend.vm_eval(code, kernels.all_masks(n), kernels.all_masks(n)) == 2)
    return [
        ("rules_sat", (proved, assumed, *masks)),
        ("vm_eval", (code, proved, assumed)),
        ("antichain_minimal", (models.astype(np.int64),)),
        ("total_minimal", (sat, n)),
    ]


def best_of(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--atoms", type=int, nargs="+", default=[4, 6, 8, 10])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if kernels.numba_backend is None:
        print("numba is not importable; nothing to compare", file=sys.stderr)
        return 1

    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<18} {'atoms':>5} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for n in args.atoms:
        for name, call_args in workloads(n, rng):
            slow = getattr(kernels.numpy_backend, name)
            fast = getattr(kernels.numba_backend, name)
            # first call also triggers compilation
            if not np.array_equal(slow(*call_args), fast(*call_args)):
                print(f"{name} disagrees at {n} atoms", file=sys.stderr)
                return 2
            t_np = best_of(slow, call_args, args.repeat) * 1e3
            t_nb = best_of(fast, call_args, args.repeat) * 1e3
            print(f"{name:<18} {n:>5} {t_np:>10.3f} {t_nb:>10.3f} {t_np / t_nb:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
