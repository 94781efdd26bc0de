#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs every hot kernel on a representative workload with both backends and
prints a timing table.  Numba functions are called once before timing so
JIT compilation is not billed.

Usage: python3 bench/benchmark.py [--repeat N]
"""

import argparse
import time

import numpy as np

from unitdist.kernels import numba_impl, numpy_impl


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cube_adjacency(d):
    size = 1 << d
    adj = np.zeros(size, dtype=np.int64)
    for v in range(size):
        for k in range(d):
            adj[v] |= 1 << (v ^ (1 << k))
    return adj


def workloads():
    rng = np.random.default_rng(0)
    ns = np.arange(1, 2_000_001, dtype=np.int64)
    occ = rng.random(1 << 16) < 0.5
    sparse = np.unique(rng.integers(0, 1 << 40, size=200_000, dtype=np.int64))
    adj5 = cube_adjacency(5)
    return [
        ("popcount_table(2e6)", lambda impl: impl.popcount_table(2_000_000)),
        ("t_closed_batch(2e6)", lambda impl: impl.t_closed_batch(ns)),
        ("dense_edge_count(d=16)", lambda impl: impl.dense_edge_count(occ, 16)),
        ("sparse_edge_count(200k, d=40)", lambda impl: impl.sparse_edge_count(sparse, 40)),
        ("max_edges_enumerate(d=5, n=8)", lambda impl: impl.max_edges_enumerate(adj5, 8)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rows = []
    for name, call in workloads():
        call(numba_impl)  # compile outside the timed region
        t_numba = timeit(lambda: call(numba_impl), args.repeat)
        t_numpy = timeit(lambda: call(numpy_impl), args.repeat)
        rows.append((name, t_numba, t_numpy))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    for name, t_numba, t_numpy in rows:
        print(f"{name:<{width}}  {t_numba:>9.4f}s  {t_numpy:>9.4f}s  {t_numpy / t_numba:>7.1f}x")


if __name__ == "__main__":
    main()
