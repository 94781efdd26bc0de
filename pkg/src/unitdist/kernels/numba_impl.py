"""Numba-jitted implementations of the hot kernels.

Everything stays in int64: vertex indices are below 2**62 and every count fits
comfortably, which sidesteps numba's uint64/int mixing pitfalls.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def popcount_table(limit):
    out = np.empty(limit, dtype=np.int64)
    for i in range(limit):
        v = i
        c = 0
        while v:
            v &= v - 1
            c += 1
        out[i] = c
    return out


@njit(cache=True)
def t_closed_batch(ns):
    out = np.empty(ns.size, dtype=np.int64)
    for i in range(ns.size):
        n = ns[i]
        total = 0
        higher = 0
        for k in range(62, -1, -1):
            if (n >> k) & 1:
                if k > 0:
                    total += k << (k - 1)
                total += higher << k
                higher += 1
        out[i] = total
    return out


@njit(cache=True)
def dense_edge_count(occ, d):
    total = 0
    for v in range(occ.size):
        if occ[v]:
            for k in range(d):
                u = v ^ (1 << k)
                if u > v and occ[u]:
                    total += 1
    return total


@njit(cache=True)
def sparse_edge_count(idx, d):
    m = idx.size
    total = 0
    for i in range(m):
        v = idx[i]
        for k in range(d):
            u = v ^ (1 << k)
            if u > v:
                lo = 0
                hi = m
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if idx[mid] < u:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo < m and idx[lo] == u:
                    total += 1
    return total


@njit(cache=True)
def max_edges_enumerate(adj, n):
    """Lexicographic scan over n-subsets with incremental edge deltas.

    Edge totals are maintained by add/remove deltas as the combination
    odometer advances; roughly 1/128 of the subsets (picked by an LCG) are
    recounted from scratch and compared, and ok=False is returned on any
    mismatch.  Returns (max_edges, argmax_mask, subsets_examined, ok).
    """
    m = adj.size
    if n == 0:
        return 0, 0, 1, True
    if n > m:
        return -1, 0, 0, True
    comb = np.empty(n, dtype=np.int64)
    mask = 0
    edges = 0
    for i in range(n):
        comb[i] = i
        x = adj[i] & mask
        while x:
            x &= x - 1
            edges += 1
        mask |= 1 << i
    best = edges
    best_mask = mask
    seen = 1
    state = 123456789
    while True:
        i = n - 1
        while i >= 0 and comb[i] == m - n + i:
            i -= 1
        if i < 0:
            break
        for j in range(n - 1, i - 1, -1):
            v = comb[j]
            mask &= ~(1 << v)
            x = adj[v] & mask
            while x:
                x &= x - 1
                edges -= 1
        nxt = comb[i] + 1
        for j in range(i, n):
            v = nxt + (j - i)
            comb[j] = v
            x = adj[v] & mask
            while x:
                x &= x - 1
                edges += 1
            mask |= 1 << v
        seen += 1
        if edges > best:
            best = edges
            best_mask = mask
        state = (state * 6364136223846793005 + 1442695040888963407) & 0x7FFFFFFFFFFFFFFF
        if state & 127 == 0:
            recount = 0
            for j in range(n):
                x = adj[comb[j]] & mask
                while x:
                    x &= x - 1
                    recount += 1
            if recount != 2 * edges:
                return best, best_mask, seen, False
    return best, best_mask, seen, True
