"""Integer lattice point sets under l1 adjacency, and the dimension-raising
compression that moves any finite set into a unit hypercube while preserving
both the vertex count and the edge count.

One compression step targets a coordinate j whose maximum M is at least 2:
points with x_j = M get a new leading coordinate 1 and x_j lowered to M - 1,
all others get leading coordinate 0.  Old edges map to edges (pairs that met
across the x_j = M boundary now meet across the new coordinate) and no new
ones appear.  Iterating over every coordinate attaining M lowers the global
maximum by exactly one; repeating until M <= 1 lands in {0,1}^m.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hypercube import MAX_DIM, CubeVertexSet

COORD_LIMIT = 1 << 20


@dataclass(frozen=True, eq=False)
class LatticePointSet:
    """Finite set of integer points in Z^ambient_dim (rows of ``points``)."""

    ambient_dim: int
    points: np.ndarray

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient_dim must be >= 1")
        pts = np.asarray(self.points, dtype=np.int64).reshape(-1, self.ambient_dim)
        if np.unique(pts, axis=0).shape[0] != pts.shape[0]:
            raise ValueError("duplicate lattice points")
        if pts.size and np.abs(pts).max() >= COORD_LIMIT:
            raise ValueError(f"coordinates must satisfy |x| < 2**20")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return int(self.points.shape[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticePointSet):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.point_set() == other.point_set()

    def point_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(map(tuple, self.points.tolist()))


def lattice_points(points, dim: int | None = None) -> LatticePointSet:
    """Build a LatticePointSet from an iterable of coordinate tuples."""
    pts = [tuple(p) for p in points]
    if dim is None:
        if not pts:
            raise ValueError("cannot infer dimension from an empty set")
        dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("points have mixed dimensions")
    arr = np.array(pts, dtype=np.int64).reshape(-1, dim)
    return LatticePointSet(dim, arr)


def lattice_edge_count(s: LatticePointSet) -> int:
    """Number of unordered pairs at l1 distance exactly 1.

    Hash-based: each point looks up its +1 neighbor along every axis, so each
    edge is counted once, in exact integer arithmetic.
    """
    pts = s.point_set()
    count = 0
    for p in pts:
        for j in range(s.ambient_dim):
            q = p[:j] + (p[j] + 1,) + p[j + 1 :]
            if q in pts:
                count += 1
    return count


def normalize(s: LatticePointSet) -> LatticePointSet:
    """Translate each coordinate independently so its minimum is 0."""
    if len(s) == 0:
        return s
    return LatticePointSet(s.ambient_dim, s.points - s.points.min(axis=0))


def coordinate_max(s: LatticePointSet) -> tuple[tuple[int, ...], int]:
    """Per-coordinate maxima and the global maximum of a normalized set."""
    if len(s) == 0:
        raise ValueError("coordinate maxima are undefined for an empty set")
    if s.points.min() < 0:
        raise ValueError("set is not normalized (negative coordinate present)")
    per = s.points.max(axis=0)
    return tuple(int(x) for x in per), int(per.max())


def compress_once(s: LatticePointSet, j: int) -> LatticePointSet:
    """One compression step on coordinate j (which must attain the global
    maximum M >= 2).  Prepends a 0/1 coordinate; vertex and edge counts are
    preserved exactly."""
    maxima, m = coordinate_max(s)
    if m < 2:
        raise ValueError(f"compression requires a coordinate maximum >= 2, got {m}")
    if not 0 <= j < s.ambient_dim:
        raise ValueError(f"coordinate {j} out of range")
    if maxima[j] != m:
        raise ValueError(f"coordinate {j} has max {maxima[j]}, not the global max {m}")
    at_max = s.points[:, j] == m
    out = np.empty((len(s), s.ambient_dim + 1), dtype=np.int64)
    out[:, 0] = at_max
    out[:, 1:] = s.points
    out[at_max, j + 1] = m - 1
    return LatticePointSet(s.ambient_dim + 1, out)


def compress_to_cube(s: LatticePointSet) -> CubeVertexSet:
    """Normalize, compress until every coordinate is 0/1, drop constant-zero
    coordinates, and re-encode as cube vertex indices (first remaining
    coordinate becomes the highest bit)."""
    if len(s) == 0:
        return CubeVertexSet(1, np.empty(0, dtype=np.int64))
    cur = normalize(s)
    while True:
        maxima, m = coordinate_max(cur)
        if m <= 1:
            break
        j = maxima.index(m)
        cur = compress_once(cur, j)
    keep = cur.points.max(axis=0) > 0
    pts = cur.points[:, keep]
    d = int(pts.shape[1])
    if d == 0:
        # every coordinate constant: the set is a single point
        return CubeVertexSet(1, np.zeros(1, dtype=np.int64))
    if d > MAX_DIM:
        raise ValueError(f"compressed dimension {d} exceeds the {MAX_DIM}-bit index limit")
    weights = np.int64(1) << np.arange(d - 1, -1, -1, dtype=np.int64)
    return CubeVertexSet(d, pts @ weights)
