"""Brute-force edge maximization over every fixed-size subset of a small
domain (a hypercube of dimension <= 5, or a lattice box of <= 16 cells).

This is the independent check for the closed formulas and the arrangement
procedure, so it must not share their machinery: subsets are scanned
exhaustively (lexicographic combination order) with incremental edge deltas,
the winner is recounted naively before being returned, and enumerations that
would exceed the budget are refused outright rather than truncated.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import BudgetExceededError

BUDGET_DEFAULT = 20_000_000
MAX_CUBE_DIM = 5
MAX_BOX_CELLS = 16


@dataclass(frozen=True)
class OracleResult:
    domain: dict
    n: int
    max_edges: int
    argmax_example: tuple
    subsets_examined: int


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _check_budget(cells: int, n: int, budget: int) -> int:
    total = math.comb(cells, n)
    if total > budget:
        raise BudgetExceededError(
            f"C({cells},{n}) = {total} subsets exceed the budget {budget}"
        )
    return total


def _run(adj: np.ndarray, n: int) -> tuple[int, int, int]:
    max_edges, argmax_mask, seen, ok = kernels.max_edges_enumerate(adj, n)
    if not ok:
        raise AssertionError("incremental edge deltas disagreed with a recount")
    return int(max_edges), int(argmax_mask), int(seen)


def cube_max_edges(d: int, n: int, budget: int = BUDGET_DEFAULT) -> OracleResult:
    """Exhaustive maximum edge count over all n-subsets of {0,1}**d."""
    if not 1 <= d <= MAX_CUBE_DIM:
        raise ValueError(f"cube oracle handles 1 <= d <= {MAX_CUBE_DIM}, got {d}")
    size = 1 << d
    if not 0 <= n <= size:
        raise ValueError(f"n must be in 0..{size}, got {n}")
    expected = _check_budget(size, n, budget)
    adj = np.zeros(size, dtype=np.int64)
    for v in range(size):
        for k in range(d):
            adj[v] |= 1 << (v ^ (1 << k))
    max_edges, mask, seen = _run(adj, n)
    argmax = _mask_to_indices(mask)
    _verify_cube_argmax(argmax, n, max_edges)
    if seen != expected:
        raise AssertionError(f"examined {seen} subsets, expected C({size},{n})={expected}")
    return OracleResult(
        domain={"kind": "cube", "dim": d},
        n=n,
        max_edges=max_edges,
        argmax_example=argmax,
        subsets_examined=seen,
    )


def _verify_cube_argmax(argmax: tuple[int, ...], n: int, max_edges: int) -> None:
    if len(argmax) != n:
        raise AssertionError(f"argmax has {len(argmax)} vertices, expected {n}")
    recount = sum(
        1 for a, b in itertools.combinations(argmax, 2) if (a ^ b).bit_count() == 1
    )
    if recount != max_edges:
        raise AssertionError(f"argmax recount {recount} != reported max {max_edges}")


def box_max_edges(
    extents: Sequence[int], n: int, budget: int = BUDGET_DEFAULT
) -> OracleResult:
    """Exhaustive maximum l1-edge count over all n-subsets of the box
    {0..e_1} x ... x {0..e_m}."""
    extents = tuple(int(e) for e in extents)
    if not extents or any(e < 0 for e in extents):
        raise ValueError(f"extents must be non-negative, got {extents}")
    cells = [tuple(p) for p in itertools.product(*(range(e + 1) for e in extents))]
    if len(cells) > MAX_BOX_CELLS:
        raise ValueError(f"box has {len(cells)} cells, oracle handles <= {MAX_BOX_CELLS}")
    if not 0 <= n <= len(cells):
        raise ValueError(f"n must be in 0..{len(cells)}, got {n}")
    expected = _check_budget(len(cells), n, budget)
    index = {p: i for i, p in enumerate(cells)}
    adj = np.zeros(len(cells), dtype=np.int64)
    for p, i in index.items():
        for j, e in enumerate(extents):
            for step in (-1, 1):
                q = p[:j] + (p[j] + step,) + p[j + 1 :]
                if 0 <= q[j] <= e:
                    adj[i] |= 1 << index[q]
    max_edges, mask, seen = _run(adj, n)
    argmax = tuple(cells[i] for i in _mask_to_indices(mask))
    _verify_box_argmax(argmax, n, max_edges)
    if seen != expected:
        raise AssertionError(f"examined {seen} subsets, expected {expected}")
    return OracleResult(
        domain={"kind": "box", "extents": extents},
        n=n,
        max_edges=max_edges,
        argmax_example=argmax,
        subsets_examined=seen,
    )


def _verify_box_argmax(argmax: tuple, n: int, max_edges: int) -> None:
    if len(argmax) != n:
        raise AssertionError(f"argmax has {len(argmax)} points, expected {n}")
    recount = sum(
        1
        for a, b in itertools.combinations(argmax, 2)
        if sum(abs(x - y) for x, y in zip(a, b)) == 1
    )
    if recount != max_edges:
        raise AssertionError(f"argmax recount {recount} != reported max {max_edges}")
