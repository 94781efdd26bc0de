"""Pure-numpy implementations of the hot kernels.

Same contracts as the numba backend; everything is vectorized, with chunking
where the working set would otherwise blow up (subset enumeration).
"""

import itertools

import numpy as np

_CHUNK = 1 << 18


def popcount_table(limit: int) -> np.ndarray:
    """Hamming weights H(0), ..., H(limit-1) as int64."""
    return np.bitwise_count(np.arange(limit, dtype=np.uint64)).astype(np.int64)


def t_closed_batch(ns: np.ndarray) -> np.ndarray:
    """Closed-form edge maximum for each n in a 1-d int64 array.

    Per set bit k of n the contribution is k*2^(k-1) plus 2^k times the
    number of set bits above k.
    """
    ns = np.asarray(ns, dtype=np.int64)
    out = np.zeros(ns.size, dtype=np.int64)
    if ns.size == 0:
        return out
    maxbits = int(ns.max()).bit_length()
    for k in range(maxbits):
        has = (ns >> k) & 1
        above = np.bitwise_count((ns >> (k + 1)).astype(np.uint64)).astype(np.int64)
        base = (k << (k - 1)) if k > 0 else 0
        out += has * (base + (above << k))
    return out


def dense_edge_count(occ: np.ndarray, d: int) -> int:
    """Hamming-distance-1 pairs inside a bitset over all 2**d indices."""
    arr = occ.reshape((2,) * d)
    total = 0
    for axis in range(d):
        total += int(np.count_nonzero(arr.take(0, axis=axis) & arr.take(1, axis=axis)))
    return total


def sparse_edge_count(idx: np.ndarray, d: int) -> int:
    """Hamming-distance-1 pairs inside a sorted int64 index array."""
    if idx.size == 0:
        return 0
    total = 0
    for k in range(d):
        nb = idx ^ np.int64(1 << k)
        pos = np.minimum(np.searchsorted(idx, nb), idx.size - 1)
        total += int(np.count_nonzero(idx[pos] == nb))
    return total // 2


def max_edges_enumerate(adj: np.ndarray, n: int):
    """Maximum edge count over all n-subsets of m vertices.

    adj[v] is the neighbor bitmask of vertex v (int64, m <= 62).  Subsets are
    scanned in lexicographic combination order, chunk by chunk; each chunk is
    scored from scratch (sum of popcount(adj[v] & mask) over members, halved).

    Returns (max_edges, argmax_mask, subsets_examined, ok) where argmax_mask
    is the first maximizer in scan order and ok is always True here (this
    path has no incremental state to cross-check).
    """
    m = int(adj.size)
    if n == 0:
        return 0, 0, 1, True
    best = -1
    best_mask = 0
    seen = 0
    combos = itertools.combinations(range(m), n)
    dt = np.dtype((np.int64, (n,)))
    while True:
        block = np.fromiter(itertools.islice(combos, _CHUNK), dtype=dt)
        if block.size == 0:
            break
        block = block.reshape(-1, n)
        masks = np.bitwise_or.reduce(np.int64(1) << block, axis=1)
        deg = np.zeros(block.shape[0], dtype=np.int64)
        for j in range(n):
            deg += np.bitwise_count((adj[block[:, j]] & masks).astype(np.uint64)).astype(np.int64)
        edges = deg >> 1
        k = int(np.argmax(edges))
        if int(edges[k]) > best:
            best = int(edges[k])
            best_mask = int(masks[k])
        seen += block.shape[0]
    return best, best_mask, seen, True
