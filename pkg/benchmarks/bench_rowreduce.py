#!/usr/bin/env python3
"""Benchmark the compiled row-reduction kernels against the pure-Python
fallback on matrices taken from real workloads.

Usage: python benchmarks/bench_rowreduce.py [--repeats N]
"""

import argparse
import random
import sys
import time
from math import gcd

from gor3 import GradedIdeal, parse_poly
from gor3 import _rowred_py
from gor3.ideals import _shifted_vectors

try:
    from gor3 import _rowred  # type: ignore[attr-defined]
except ImportError:
    _rowred = None

VARS = ["x", "y", "z"]


def integer_rows_from_piece(piece):
    out = []
    for row in piece.rows:
        lcm = 1
        for v in row:
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
        out.append([int(v * lcm) for v in row])
    return out


def workload_matrices():
    """Shifted-generator spans, colon-power pieces and a dense stacked
    matrix; these shapes dominate the library's runtime."""
    out = []
    base = GradedIdeal.from_strings(["x^5", "y^5", "z^5"])
    for t in (11, 13):
        vecs = _shifted_vectors(3, t, base._gen_data, base.field)
        out.append((f"pure-power span, degree {t} "
                    f"({len(vecs)}x{len(vecs[0])})",
                    [[int(v) for v in row] for row in vecs]))
    I = GradedIdeal.from_strings(["x^3", "y^3", "z^3"]).colon(
        parse_poly("x^2+y^2+z^2", VARS))
    for k, t in ((2, 7), (3, 9)):
        rows = integer_rows_from_piece(I.power_piece(k, t))
        out.append((f"colon-power piece k={k}, t={t} "
                    f"({len(rows)}x{len(rows[0])})", rows))
    rng = random.Random(0)
    dense = [[rng.randint(-50, 50) for _ in range(120)] for _ in range(100)]
    out.append(("dense random 100x120", dense))
    return out


def bench(fn, args, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _rowred is None:
        print("compiled kernel not built; showing pure-Python timings only")

    p = 2147483629
    fmt = "{:<44} {:>12} {:>12} {:>8}"
    print(fmt.format("matrix", "python", "cython", "speedup"))
    print("-" * 80)
    for label, rows in workload_matrices():
        mod_rows = [[v % p for v in r] for r in rows]
        for suffix, pure_fn, fast_fn, fn_args in (
            ("over QQ", _rowred_py.rref_int,
             _rowred.rref_int if _rowred else None, (rows,)),
            ("mod p", _rowred_py.rref_mod,
             _rowred.rref_mod if _rowred else None, (mod_rows, p)),
        ):
            t_pure = bench(pure_fn, fn_args, args.repeats)
            if fast_fn is None:
                print(fmt.format(f"{label} {suffix}",
                                 f"{t_pure * 1e3:.2f} ms", "-", "-"))
                continue
            t_fast = bench(fast_fn, fn_args, args.repeats)
            assert fast_fn(*fn_args) == pure_fn(*fn_args)
            print(fmt.format(
                f"{label} {suffix}",
                f"{t_pure * 1e3:.2f} ms",
                f"{t_fast * 1e3:.2f} ms",
                f"{t_pure / t_fast:.1f}x"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
