"""Unit direction sets on the upper half circle and their certification.

A direction set u_1..u_d (angles in [0, pi)) is usable for the lattice
constructions when no integer combination with two or more nonzero
coefficients lands on the unit circle.  That condition over *all* integers is
not decidable in floating point, so certificates are explicitly bounded:
``check_good`` enumerates coefficients in [-B, B]^d and the verdict is
"good_up_to_B".  Bound B=1 is exactly what the 0/1-coordinate construction
needs, since differences of its points have coefficients in {-1, 0, 1}.

Norms are evaluated through the Gram matrix (sum a_j^2 + 2 sum_{j<k} a_j a_k
cos(theta_j - theta_k)) rather than by summing unit vectors, which keeps the
residuals free of cancellation noise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError

DELTA_DEFAULT = 1e-9
DELTA_MAX = 1e-3
MIN_SEPARATION = 1e-6
TUPLE_BUDGET_DEFAULT = 100_000_000
RETRY_LIMIT_DEFAULT = 1000

_CHUNK = 1 << 16


@dataclass(frozen=True)
class DirectionSet:
    """Ordered distinct angles in [0, pi), each representing the unit vector
    (cos theta, sin theta)."""

    angles: tuple[float, ...]

    def __post_init__(self):
        angles = tuple(float(a) for a in self.angles)
        object.__setattr__(self, "angles", angles)
        if len(angles) < 1:
            raise ValueError("need at least one direction")
        for a in angles:
            if not 0.0 <= a < math.pi:
                raise ValueError(f"angle {a} outside [0, pi)")
        for i, j in itertools.combinations(range(len(angles)), 2):
            if abs(angles[i] - angles[j]) <= MIN_SEPARATION:
                raise ValueError(
                    f"angles {i} and {j} closer than {MIN_SEPARATION}: "
                    f"{angles[i]} vs {angles[j]}"
                )

    def __len__(self) -> int:
        return len(self.angles)

    def unit_vectors(self) -> np.ndarray:
        """(d, 2) array of (cos theta, sin theta) rows."""
        a = np.asarray(self.angles)
        return np.column_stack([np.cos(a), np.sin(a)])

    def gram(self) -> np.ndarray:
        """Pairwise dot products cos(theta_i - theta_j), unit diagonal."""
        a = np.asarray(self.angles)
        g = np.cos(a[:, None] - a[None, :])
        np.fill_diagonal(g, 1.0)
        return g


@dataclass(frozen=True)
class GoodnessCertificate:
    bound: int
    delta: float
    verdict: str  # "good_up_to_B" or "bad"
    witness: tuple[int, ...] | None = None
    residual: float | None = None

    @property
    def is_good(self) -> bool:
        return self.verdict == "good_up_to_B"


def combination_norm(directions: DirectionSet, coeffs) -> float:
    """Euclidean norm of sum_j coeffs[j] * u_j via the Gram expansion."""
    a = np.asarray(coeffs, dtype=np.float64)
    return float(math.sqrt(max(a @ directions.gram() @ a, 0.0)))


def check_good(
    directions: DirectionSet,
    bound: int,
    delta: float = DELTA_DEFAULT,
    tuple_budget: int = TUPLE_BUDGET_DEFAULT,
) -> GoodnessCertificate:
    """Certify that no coefficient tuple in [-bound, bound]^d with two or more
    nonzero entries combines to a unit-norm vector (within delta).

    Enumeration covers one representative per sign pair (first nonzero
    positive); the first witness in lexicographic order over the full product
    range is reported, so results do not depend on chunking.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if not 0.0 < delta <= DELTA_MAX:
        raise ValueError(f"delta must be in (0, {DELTA_MAX}], got {delta}")
    d = len(directions)
    width = 2 * bound + 1
    cost = d * width**d
    if cost > tuple_budget:
        raise BudgetExceededError(
            f"{d}*({width})^{d} = {cost} tuple evaluations exceed the budget {tuple_budget}"
        )
    gram = directions.gram()
    combos = itertools.product(range(-bound, bound + 1), repeat=d)
    dt = np.dtype((np.int64, (d,)))
    while True:
        block = np.fromiter(itertools.islice(combos, _CHUNK), dtype=dt)
        if block.size == 0:
            break
        block = block.reshape(-1, d)
        nonzero = block != 0
        enough = nonzero.sum(axis=1) >= 2
        first_nz = nonzero.argmax(axis=1)
        canonical = block[np.arange(block.shape[0]), first_nz] > 0
        candidates = enough & canonical
        if not candidates.any():
            continue
        a = block.astype(np.float64)
        norms = np.sqrt(np.maximum(np.einsum("td,de,te->t", a, gram, a), 0.0))
        hits = candidates & (np.abs(norms - 1.0) <= delta)
        if hits.any():
            k = int(np.argmax(hits))
            witness = tuple(int(x) for x in block[k])
            return GoodnessCertificate(
                bound=bound,
                delta=delta,
                verdict="bad",
                witness=witness,
                residual=float(abs(norms[k] - 1.0)),
            )
    return GoodnessCertificate(bound=bound, delta=delta, verdict="good_up_to_B")


def random_good_directions(
    d: int,
    bound: int,
    seed: int,
    delta: float = DELTA_DEFAULT,
    retry_limit: int = RETRY_LIMIT_DEFAULT,
) -> DirectionSet:
    """Rejection-sample a direction set that passes check_good at the given
    bound.  Deterministic for a fixed seed; raises RuntimeError if no sample
    passes within retry_limit attempts (delta or bound too demanding)."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    rng = np.random.default_rng(seed)
    for _ in range(retry_limit):
        angles = rng.uniform(0.0, math.pi, size=d)
        diffs = np.abs(angles[:, None] - angles[None, :])
        np.fill_diagonal(diffs, np.inf)
        if d > 1 and diffs.min() <= MIN_SEPARATION:
            continue
        candidate = DirectionSet(tuple(angles.tolist()))
        if check_good(candidate, bound, delta).is_good:
            return candidate
    raise RuntimeError(
        f"no good direction set found in {retry_limit} attempts "
        f"(d={d}, bound={bound}, delta={delta})"
    )
