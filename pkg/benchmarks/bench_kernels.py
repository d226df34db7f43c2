"""Compiled vs pure-Python kernels on real workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times one DP step over the reflection table and Lehmer ranking of every
permutation, for a few groups, and checks that both backends agree.
"""

import argparse
import timeit

import numpy as np

from coxfact import _kernels_py, groups
from coxfact.counting import reflection_table

try:
    from coxfact import _kernels
except ImportError:
    _kernels = None

SPECS = [groups.symmetric(7), groups.gr1n(3, 4), groups.grrn(4, 4), groups.gr1n(2, 6)]


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the Python kernels can run")
    rng = np.random.default_rng(0)
    print(f"{'group':<10} {'|W|':>7} {'|R|':>4}  {'kernel':<12} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for spec in SPECS:
        table = reflection_table(spec)
        rows = table.tolist()
        f = rng.integers(0, 1000, size=spec.order).tolist()
        f64 = np.asarray(f, dtype=np.int64)
        perms = np.ascontiguousarray(spec.table.perms)
        py_dp = best(lambda: _kernels_py.dp_step(f, rows), args.repeat)
        py_lr = best(lambda: _kernels_py.lehmer_rank(perms), args.repeat)
        if _kernels is not None:
            assert _kernels.dp_step(f64, table).tolist() == _kernels_py.dp_step(f, rows)
            assert np.array_equal(_kernels.lehmer_rank(perms), _kernels_py.lehmer_rank(perms))
            c_dp = best(lambda: _kernels.dp_step(f64, table), args.repeat)
            c_lr = best(lambda: _kernels.lehmer_rank(perms), args.repeat)
        else:
            c_dp = c_lr = float("nan")
        for name, p, c in (("dp_step", py_dp, c_dp), ("lehmer_rank", py_lr, c_lr)):
            print(f"{spec.name:<10} {spec.order:>7} {spec.num_reflections:>4}  {name:<12} {p:>10.4f} {c:>11.4f} {p / c:>7.1f}x")


if __name__ == "__main__":
    main()
