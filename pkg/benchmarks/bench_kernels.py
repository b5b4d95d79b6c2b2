#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python reference.

Micro-benchmarks time the three kernel routines directly on seeded random
matrices; the end-to-end rows time derived-functor computations through
the full stack with the backend switched via dfw._kernels.use().

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from dfw import _kernels, linalg
from dfw.derived import Presentation, l1_sp, l2_superlie3
from dfw.linalg import IntMatrix, column_basis


def rand_rows(rng, r, c, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


def time_call(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def low_rank_rows(rng, r, c, inner, bound=2):
    a = rand_rows(rng, r, inner, bound)
    b = rand_rows(rng, inner, c, bound)
    return [
        [sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(c)]
        for i in range(r)
    ]


def micro_cases(rng):
    # Reduction on dense random input swells intermediate entries fast and
    # ends up bignum-bound; the package's own profile is many small or
    # low-rank reductions, so benchmark that regime.
    a40 = rand_rows(rng, 40, 40)
    b40 = rand_rows(rng, 40, 40)
    batch = [rand_rows(rng, 12, 20, 6) for _ in range(200)]
    s = rand_rows(rng, 24, 24, bound=5)
    lowrank = low_rank_rows(rng, 60, 150, 10)
    return [
        ("mat_mul 40x40 @ 40x40", lambda impl: impl.mat_mul(a40, b40, 40, 40, 40)),
        ("hermite_cols 12x20 x200", lambda impl: [impl.hermite_cols(m, 12, 20) for m in batch]),
        ("smith 24x24 (transforms)", lambda impl: impl.smith(s, 24, 24, True)),
        ("smith 60x150 rank 10 (diag)", lambda impl: impl.smith(lowrank, 60, 150, False)),
    ]


def end_to_end_batch(rng, count=12):
    batch = []
    while len(batch) < count:
        r = rng.randint(4, 5)
        k = rng.randint(2, r)
        u = column_basis(
            IntMatrix(r, k, (rng.randint(-6, 6) for _ in range(r * k)))
        )
        batch.append(Presentation(r, u))
    return batch


def run_end_to_end(batch):
    for p in batch:
        l1_sp(4, p)
        l2_superlie3(p)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = ap.parse_args()

    backends = _kernels.available_backends()
    if len(backends) < 2:
        print("compiled backend unavailable; timing the pure backend only")

    rng = random.Random(1)
    rows = []
    from dfw._kernels import pure

    impls = {"pure": pure}
    if "cython" in backends:
        from dfw._kernels import _speed

        impls["cython"] = _speed

    for label, call in micro_cases(rng):
        times = {}
        for name, impl in impls.items():
            times[name] = time_call(lambda: call(impl), args.repeat)
        rows.append((label, times))

    batch = end_to_end_batch(random.Random(2))
    times = {}
    for name in impls:
        _kernels.use(name)
        linalg.clear_caches()
        times[name] = time_call(lambda: run_end_to_end(batch), args.repeat)
    _kernels.use(backends[-1])
    rows.append(("end-to-end: 12x (l1_sp(4) + l2_superlie3)", times))

    width = max(len(r[0]) for r in rows) + 2
    header = f"{'case':<{width}}" + "".join(f"{n:>12}" for n in impls)
    if "cython" in impls:
        header += f"{'speedup':>10}"
    print(header)
    for label, times in rows:
        line = f"{label:<{width}}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in impls)
        if "cython" in impls:
            line += f"{times['pure'] / times['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
