"""Hypercube vertex sets and the edge-preserving arrangement procedure.

Vertices of {0,1}^d are stored as integer indices: bit k of the index is
coordinate x_k, so the leftmost coordinate x_{d-1} is the highest bit and
index j encodes the binary expansion of j.  Two vertices are adjacent when
their indices differ in exactly one bit.

The 2x2 block picture drives everything: splitting on the top two coordinates
gives blocks A (x_{d-1}=0, x_{d-2}=0), B (0,1), C (1,0), D (1,1), arranged as

        A | B
        -----
        C | D

with x_{d-1} selecting the bottom row and x_{d-2} the right column.  Rows and
columns are (d-1)-subcubes; "arranging" one means filling it consecutively
from its least index, which is exactly the totally arranged set of that
subcube (for columns, the downward order v_0..v_{2^(d-2)-1}, v_{2^(d-1)}..
makes x_{d-1} the new top bit of the column subcube).  ``total_arrange``
chains these fills with block swaps into a sequence of operations that never
loses an edge and always ends at the prefix {0..n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from . import kernels

MAX_DIM = 62
# bitset occupancy below this cube size, sorted index array above
DENSE_LIMIT = 1 << 20
# traces drop vertex snapshots for sets larger than this
SNAPSHOT_LIMIT = 1 << 16


@dataclass(frozen=True, eq=False)
class CubeVertexSet:
    """Immutable subset of {0,1}**dim held as sorted unique vertex indices."""

    dim: int
    indices: np.ndarray

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must be in 1..{MAX_DIM}, got {self.dim}")
        idx = np.unique(np.asarray(self.indices, dtype=np.int64))
        if idx.size != np.asarray(self.indices).size:
            raise ValueError("duplicate vertex indices")
        if idx.size and (idx[0] < 0 or idx[-1] >= (1 << self.dim)):
            raise ValueError(f"vertex index out of range for dim {self.dim}")
        idx.setflags(write=False)
        object.__setattr__(self, "indices", idx)

    def __len__(self) -> int:
        return int(self.indices.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubeVertexSet):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self.indices, other.indices)

    def __repr__(self) -> str:
        return f"CubeVertexSet(dim={self.dim}, indices={self.indices.tolist()})"

    def to_set(self) -> set[int]:
        return set(self.indices.tolist())


def vertex_set(dim: int, vertices: Iterable[int]) -> CubeVertexSet:
    return CubeVertexSet(dim, np.fromiter(vertices, dtype=np.int64))


def prefix_set(dim: int, n: int) -> CubeVertexSet:
    """The totally arranged set {0, ..., n-1} in dimension dim."""
    if n > (1 << dim):
        raise ValueError(f"n={n} exceeds 2**{dim}")
    return CubeVertexSet(dim, np.arange(n, dtype=np.int64))


def edge_count(v: CubeVertexSet) -> int:
    """Number of Hamming-distance-1 pairs inside the set."""
    if (1 << v.dim) <= DENSE_LIMIT:
        occ = np.zeros(1 << v.dim, dtype=np.bool_)
        occ[v.indices] = True
        return int(kernels.dense_edge_count(occ, v.dim))
    return int(kernels.sparse_edge_count(v.indices, v.dim))


class BlockSizes(NamedTuple):
    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class BlockDecomposition:
    """The four blocks of a set under the top-two-coordinate split.

    Blocks keep the parent's indexing (they are index subsets, not re-encoded
    (d-2)-cubes) and always partition the parent set.
    """

    parent: CubeVertexSet
    a: CubeVertexSet
    b: CubeVertexSet
    c: CubeVertexSet
    d: CubeVertexSet

    @property
    def sizes(self) -> BlockSizes:
        return BlockSizes(len(self.a), len(self.b), len(self.c), len(self.d))


def _block_of(indices: np.ndarray, dim: int) -> np.ndarray:
    """0=A, 1=B, 2=C, 3=D per vertex: bit d-1 picks the row, bit d-2 the column."""
    row = (indices >> (dim - 1)) & 1
    col = (indices >> (dim - 2)) & 1
    return (row << 1) | col


def block_decomposition(v: CubeVertexSet) -> BlockDecomposition:
    if v.dim < 2:
        raise ValueError("blocks need dim >= 2")
    which = _block_of(v.indices, v.dim)
    parts = [CubeVertexSet(v.dim, v.indices[which == q]) for q in range(4)]
    return BlockDecomposition(v, *parts)


def _block_sizes(v: CubeVertexSet) -> BlockSizes:
    which = _block_of(v.indices, v.dim)
    return BlockSizes(*(int(np.count_nonzero(which == q)) for q in range(4)))


def _cross_count(v: CubeVertexSet, bit: int) -> int:
    """Pairs differing exactly in the given bit (one endpoint on each side)."""
    lo = v.indices[(v.indices >> bit) & 1 == 0]
    return int(np.count_nonzero(np.isin(lo | (1 << bit), v.indices, assume_unique=True)))


class EdgePartition(NamedTuple):
    e_ab: int
    e_cd: int
    e_vert: int
    e_ac: int
    e_bd: int
    e_hor: int


def partition_edges(v: CubeVertexSet) -> EdgePartition:
    """Edge counts of the two block partitions.

    Row split: edges inside the top row (AB), inside the bottom row (CD), and
    vertical edges crossing between rows (these differ exactly in bit d-1).
    Column split likewise with horizontal edges crossing bit d-2.  Both
    triples sum to the total edge count.
    """
    d = v.dim
    if d < 2:
        raise ValueError("partition_edges needs dim >= 2")
    total = edge_count(v)
    top = CubeVertexSet(d, v.indices[v.indices < (1 << (d - 1))])
    bottom = CubeVertexSet(d, v.indices[v.indices >= (1 << (d - 1))])
    left = CubeVertexSet(d, v.indices[(v.indices >> (d - 2)) & 1 == 0])
    right = CubeVertexSet(d, v.indices[(v.indices >> (d - 2)) & 1 == 1])
    part = EdgePartition(
        e_ab=edge_count(top),
        e_cd=edge_count(bottom),
        e_vert=_cross_count(v, d - 1),
        e_ac=edge_count(left),
        e_bd=edge_count(right),
        e_hor=_cross_count(v, d - 2),
    )
    if part.e_ab + part.e_cd + part.e_vert != total:
        raise AssertionError(f"row partition does not sum to {total}: {part}")
    if part.e_ac + part.e_bd + part.e_hor != total:
        raise AssertionError(f"column partition does not sum to {total}: {part}")
    return part


def flip_coordinate(v: CubeVertexSet, i: int) -> CubeVertexSet:
    """Graph automorphism toggling coordinate x_i of every vertex."""
    if not 0 <= i < v.dim:
        raise ValueError(f"coordinate {i} out of range for dim {v.dim}")
    return CubeVertexSet(v.dim, v.indices ^ np.int64(1 << i))


def swap_coordinates(v: CubeVertexSet, i: int, j: int) -> CubeVertexSet:
    """Graph automorphism exchanging coordinates x_i and x_j."""
    for c in (i, j):
        if not 0 <= c < v.dim:
            raise ValueError(f"coordinate {c} out of range for dim {v.dim}")
    if i == j:
        return v
    diff = ((v.indices >> i) ^ (v.indices >> j)) & 1
    return CubeVertexSet(v.dim, v.indices ^ ((diff << i) | (diff << j)))


def _fill(order_blocks: list[tuple[int, int]], count: int) -> np.ndarray:
    """First `count` indices from consecutive ranges [start, start+size)."""
    out = np.empty(count, dtype=np.int64)
    pos = 0
    for start, size in order_blocks:
        if pos == count:
            break
        take = min(size, count - pos)
        out[pos : pos + take] = np.arange(start, start + take, dtype=np.int64)
        pos += take
    return out


def horizontal_arrange(v: CubeVertexSet) -> CubeVertexSet:
    """Fill each row consecutively from its least index, keeping row counts.

    The top row becomes {0..|V_AB|-1} and the bottom row {2^(d-1)..}, i.e.
    each row is replaced by the totally arranged set of its (d-1)-subcube.
    """
    d = v.dim
    if d < 2:
        raise ValueError("horizontal_arrange needs dim >= 2")
    half = 1 << (d - 1)
    n_top = int(np.count_nonzero(v.indices < half))
    n_bottom = len(v) - n_top
    idx = np.concatenate([_fill([(0, half)], n_top), _fill([(half, half)], n_bottom)])
    return CubeVertexSet(d, idx)


def vertical_arrange(v: CubeVertexSet) -> CubeVertexSet:
    """Fill each column consecutively downward, keeping column counts.

    Downward order in the left column is v_0..v_{2^(d-2)-1} then v_{2^(d-1)}..,
    so block A fills before C (and B before D on the right); this is the
    totally arranged order of the column subcube when x_{d-1} is read as its
    new top bit.
    """
    d = v.dim
    if d < 2:
        raise ValueError("vertical_arrange needs dim >= 2")
    quarter = 1 << (d - 2)
    half = 1 << (d - 1)
    n_left = int(np.count_nonzero((v.indices >> (d - 2)) & 1 == 0))
    n_right = len(v) - n_left
    left = _fill([(0, quarter), (half, quarter)], n_left)
    right = _fill([(quarter, quarter), (half + quarter, quarter)], n_right)
    return CubeVertexSet(d, np.concatenate([left, right]))


def swap_blocks_cd(v: CubeVertexSet) -> CubeVertexSet:
    """Exchange blocks C and D by toggling bit d-2 on the bottom row only.

    Not a cube automorphism (the top row is untouched), so edge preservation
    is not automatic: it holds when every moved vertex keeps its vertical
    partner, which the arrangement procedure guarantees (|V_D| <= |V_B| with
    consecutive fills).  The count is asserted here rather than trusted.
    """
    d = v.dim
    if d < 2:
        raise ValueError("swap_blocks_cd needs dim >= 2")
    half = np.int64(1 << (d - 1))
    bottom = v.indices >= half
    idx = np.where(bottom, v.indices ^ np.int64(1 << (d - 2)), v.indices)
    out = CubeVertexSet(d, idx)
    before, after = edge_count(v), edge_count(out)
    if after != before:
        raise AssertionError(f"C/D interchange changed the edge count: {before} -> {after}")
    return out


@dataclass(frozen=True)
class ArrangeStep:
    op: str
    edges: int
    vertices: tuple[int, ...] | None


@dataclass
class ArrangeTrace:
    """Operation log of one total_arrange run; edge counts never decrease."""

    initial_edges: int
    steps: list[ArrangeStep]

    @property
    def final_edges(self) -> int:
        return self.steps[-1].edges if self.steps else self.initial_edges

    def as_dict(self) -> dict:
        return {
            "initial_edges": self.initial_edges,
            "steps": [
                {
                    "op": s.op,
                    "edges": s.edges,
                    "vertices": list(s.vertices) if s.vertices is not None else None,
                }
                for s in self.steps
            ],
            "final_edges": self.final_edges,
        }


def _record(trace: ArrangeTrace, op: str, v: CubeVertexSet) -> CubeVertexSet:
    edges = edge_count(v)
    if edges < trace.final_edges:
        raise AssertionError(f"step {op} dropped edges {trace.final_edges} -> {edges}")
    snap = tuple(v.indices.tolist()) if len(v) <= SNAPSHOT_LIMIT else None
    trace.steps.append(ArrangeStep(op, edges, snap))
    return v


def _assert_arranged_form(sizes: BlockSizes, v: CubeVertexSet) -> None:
    """Case-2b preconditions: A full, D empty, B and C consecutive prefixes.

    The mid-case exit ("swap leaves B full or C empty, hence done") leans on
    these; they follow from vertical arrangement, and a violation would mean
    the column fill order is wrong, so fail loudly instead of patching.
    """
    d = v.dim
    quarter = 1 << (d - 2)
    half = 1 << (d - 1)
    which = _block_of(v.indices, d)
    b_idx = v.indices[which == 1]
    c_idx = v.indices[which == 2]
    ok = (
        sizes.a == quarter
        and sizes.d == 0
        and np.array_equal(b_idx, np.arange(quarter, quarter + sizes.b, dtype=np.int64))
        and np.array_equal(c_idx, np.arange(half, half + sizes.c, dtype=np.int64))
    )
    if not ok:
        raise AssertionError(f"unexpected block form before C/D handling: {v!r}")


def total_arrange(v: CubeVertexSet) -> tuple[CubeVertexSet, ArrangeTrace]:
    """Push any vertex set to the prefix {0..n-1} without losing edges.

    One pass of: vertically arrange; flip x_{d-2} if the left column is the
    lighter one; then by block shape either finish with a horizontal arrange
    (B full, or C empty), or handle the leftover C block (swap columns via
    the x_{d-2}/x_{d-1} coordinate swap when C outweighs B, push C onto D,
    re-arrange vertically and finish horizontally if B filled up).

    Returns the arranged set and the step trace; the trace's edge counts are
    checked non-decreasing and the result is checked to be the exact prefix.
    """
    n = len(v)
    trace = ArrangeTrace(initial_edges=edge_count(v), steps=[])
    if n == 0:
        return v, trace
    d = v.dim
    if d < 2:
        cur = _record(trace, "complete_arrange_base", prefix_set(d, n))
    else:
        quarter = 1 << (d - 2)
        cur = _record(trace, "vertical_arrange", vertical_arrange(v))
        sizes = _block_sizes(cur)
        if sizes.a + sizes.c < sizes.b + sizes.d:
            cur = _record(trace, f"flip({d - 2})", flip_coordinate(cur, d - 2))
            sizes = _block_sizes(cur)
        if sizes.b == quarter or sizes.c == 0:
            cur = _record(trace, "horizontal_arrange", horizontal_arrange(cur))
        else:
            _assert_arranged_form(sizes, cur)
            if sizes.b < sizes.c:
                cur = _record(
                    trace, f"swap({d - 2},{d - 1})", swap_coordinates(cur, d - 2, d - 1)
                )
                sizes = _block_sizes(cur)
            if not (sizes.b == quarter or sizes.c == 0):
                cur = _record(trace, "swap_blocks_CD", swap_blocks_cd(cur))
                cur = _record(trace, "vertical_arrange", vertical_arrange(cur))
                if _block_sizes(cur).b == quarter:
                    cur = _record(trace, "horizontal_arrange", horizontal_arrange(cur))
    if cur != prefix_set(d, n):
        raise AssertionError(f"arrangement did not reach the prefix set: {cur!r}")
    return cur, trace
