"""Planar point configurations achieving the extremal unit-distance count.

Given a certified direction set u_0..u_{d-1}, the configuration for n points
(2^(d-1) < n <= 2^d) places one point per integer 0 <= j < n at
sum_k bit_k(j) * u_k.  Differences of such points have coefficients in
{-1, 0, 1}, so a bound-1 certificate guarantees that Euclidean unit distance
happens exactly for pairs at l1 distance 1 in the 0/1 lattice coordinates,
and the unit-pair count equals the hypercube edge count of {0..n-1}.

Distance classification is tolerance-audited: any pair whose distance falls
outside the unit band but within ten times it raises ToleranceAmbiguityError
instead of being silently classified.

Error budget for the default tol of 1e-9: coordinates are sums of at most 62
unit vectors evaluated in double precision, so absolute coordinate error
stays around 1e-13 and distances land well inside the band; certification at
delta >= tol guarantees non-adjacent lattice pairs stay outside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .directions import DELTA_DEFAULT, DirectionSet, GoodnessCertificate, check_good
from .errors import ToleranceAmbiguityError
from .tcount import t_closed

TOL_DEFAULT = 1e-9
AMBIGUITY_FACTOR = 10.0
ANGLE_TOL = 1e-8
_ROW_CHUNK = 512


@dataclass(frozen=True)
class PlanarConfig:
    """n planar points plus the direction set and tolerance that define them."""

    points: np.ndarray
    directions: DirectionSet
    tol: float

    @property
    def n(self) -> int:
        return int(self.points.shape[0])


@dataclass(frozen=True)
class UnitDistanceReport:
    """All unit pairs of a configuration and the distinct directions they use."""

    unit_pairs: tuple[tuple[int, int], ...]
    distinct_directions: np.ndarray
    count: int


def required_dim(n: int) -> int:
    """The d with 2^(d-1) < n <= 2^d (d >= 1; n=1 also uses d=1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return max((n - 1).bit_length(), 1)


def build_config(
    n: int,
    directions: DirectionSet,
    certificate: GoodnessCertificate | None = None,
    tol: float = TOL_DEFAULT,
) -> PlanarConfig:
    """Place points sum_k bit_k(j) u_k for j = 0..n-1.

    The direction count must equal required_dim(n); the set must carry (or
    pass on the spot) a bound-1 goodness certificate.
    """
    d = required_dim(n)
    if len(directions) != d:
        raise ValueError(f"n={n} needs exactly {d} directions, got {len(directions)}")
    if certificate is None:
        certificate = check_good(directions, 1, DELTA_DEFAULT)
    if certificate.bound < 1 or not certificate.is_good:
        raise ValueError(f"directions are not certified good at bound >= 1: {certificate}")
    bits = (np.arange(n, dtype=np.int64)[:, None] >> np.arange(d)) & 1
    points = bits.astype(np.float64) @ directions.unit_vectors()
    config = PlanarConfig(points=points, directions=directions, tol=tol)
    _check_distinct(config)
    return config


def _check_distinct(config: PlanarConfig) -> None:
    n = config.n
    for i0, diff, dist in _pair_scan(config.points):
        cols = np.arange(n)[None, :]
        rows = (i0 + np.arange(dist.shape[0]))[:, None]
        close = (dist <= config.tol) & (rows < cols)
        if close.any():
            i, j = _pair_index(i0, close)
            raise ValueError(f"points {i} and {j} coincide within tol")


def _pair_scan(points: np.ndarray):
    """Yield (row_offset, diff block, dist block) over all i<j pairs, chunked
    by rows so the O(n^2) scan never materializes the full matrix."""
    n = points.shape[0]
    for i0 in range(0, n, _ROW_CHUNK):
        rows = points[i0 : i0 + _ROW_CHUNK]
        diff = rows[:, None, :] - points[None, :, :]
        dist = np.hypot(diff[..., 0], diff[..., 1])
        yield i0, diff, dist


def _pair_index(i0: int, mask: np.ndarray) -> tuple[int, int]:
    r, c = np.argwhere(mask)[0]
    return int(i0 + r), int(c)


def count_unit_distances(config: PlanarConfig) -> UnitDistanceReport:
    """All-pairs unit-distance scan with ambiguity auditing.

    Directions of unit pairs are canonicalized to principal argument in
    [0, pi) and deduplicated circularly (angles are compared modulo pi, so
    sign-flip noise at argument 0 cannot split a direction in two).
    """
    n = config.n
    tol = config.tol
    pairs: list[tuple[int, int]] = []
    vecs: list[np.ndarray] = []
    for i0, diff, dist in _pair_scan(config.points):
        resid = np.abs(dist - 1.0)
        unit = resid <= tol
        gray = (resid <= AMBIGUITY_FACTOR * tol) & ~unit
        # keep i < j only
        cols = np.arange(n)[None, :]
        rows = (i0 + np.arange(dist.shape[0]))[:, None]
        upper = rows < cols
        if (gray & upper).any():
            i, j = _pair_index(i0, gray & upper)
            raise ToleranceAmbiguityError(
                f"pair ({i},{j}) has distance {dist[i - i0, j]}: inside "
                f"{AMBIGUITY_FACTOR}x the tolerance band but outside it"
            )
        hit = unit & upper
        for r, c in np.argwhere(hit):
            i, j = int(i0 + r), int(c)
            pairs.append((i, j))
            vecs.append(_canonical_direction(diff[r, c]))
    distinct = _dedupe_directions(vecs)
    return UnitDistanceReport(
        unit_pairs=tuple(pairs), distinct_directions=distinct, count=len(pairs)
    )


def _canonical_direction(v: np.ndarray) -> np.ndarray:
    """Flip sign so the argument lies in [0, pi)."""
    x, y = float(v[0]), float(v[1])
    if y < 0.0 or (y == 0.0 and x < 0.0):
        return np.array([-x, -y])
    return np.array([x, y])


def _circular_gap(a: float, b: float) -> float:
    """Distance between two arguments modulo pi."""
    g = abs(a - b) % math.pi
    return min(g, math.pi - g)


def _dedupe_directions(vecs: list[np.ndarray]) -> np.ndarray:
    reps: list[tuple[float, np.ndarray]] = []
    for v in vecs:
        ang = math.atan2(v[1], v[0]) % math.pi
        if not any(_circular_gap(ang, a) <= ANGLE_TOL for a, _ in reps):
            reps.append((ang, v))
    reps.sort(key=lambda item: item[0])
    if not reps:
        return np.empty((0, 2))
    return np.vstack([v for _, v in reps])


@dataclass(frozen=True)
class ExtremalCheck:
    ok: bool
    n: int
    count: int
    expected: int
    directions_ok: bool
    report: UnitDistanceReport


def verify_extremal(
    n: int,
    directions: DirectionSet,
    certificate: GoodnessCertificate | None = None,
    tol: float = TOL_DEFAULT,
) -> ExtremalCheck:
    """Build the configuration, count unit pairs, and compare against the
    formula value; also checks every observed direction matches one of the
    configured ones (within angle tolerance)."""
    config = build_config(n, directions, certificate, tol)
    report = count_unit_distances(config)
    expected = t_closed(n)
    configured = [a % math.pi for a in directions.angles]
    directions_ok = True
    for v in report.distinct_directions:
        ang = math.atan2(v[1], v[0]) % math.pi
        if not any(_circular_gap(ang, c) <= ANGLE_TOL for c in configured):
            directions_ok = False
            break
    ok = report.count == expected and directions_ok
    return ExtremalCheck(
        ok=ok, n=n, count=report.count, expected=expected,
        directions_ok=directions_ok, report=report,
    )


def canonicalize(points: np.ndarray, tol: float = TOL_DEFAULT) -> np.ndarray:
    """Translate/rotate a point list so the first unit pair (lowest indices)
    sits at (0,0) and (1,0); with no unit pair, just translate the first point
    to the origin.  Empty input is returned unchanged."""
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if pts.shape[0] == 0:
        return pts
    anchor = None
    for i0, diff, dist in _pair_scan(pts):
        cols = np.arange(pts.shape[0])[None, :]
        rows = (i0 + np.arange(dist.shape[0]))[:, None]
        hit = (np.abs(dist - 1.0) <= tol) & (rows < cols)
        if hit.any():
            anchor = _pair_index(i0, hit)
            break
    if anchor is None:
        return pts - pts[0]
    i, j = anchor
    shifted = pts - pts[i]
    ux, uy = shifted[j]
    rot = np.array([[ux, uy], [-uy, ux]]) / math.hypot(ux, uy)
    return shifted @ rot.T
