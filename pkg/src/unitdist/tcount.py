"""Exact formulas for the maximum edge count T(n).

T(n) is the most edges n vertices can induce in a unit hypercube graph of any
dimension (equivalently: the most unit distances n planar points can achieve
when their distinct unit directions are rationally independent).  Three
independent routes are implemented:

* ``t_closed``      -- closed form over the binary expansion of n,
* ``t_hamming_sum`` -- direct summation of Hamming weights H(0..n-1),
* ``t_recurrence``  -- folding the single-step increment T(k+1) = T(k) + H(k).

They must agree everywhere; tests and the CLI verify-all check enforce it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels

# t_closed stays far from int64 overflow up to here; larger n is rejected
# rather than risking a silent wrap in the batch kernels.
MAX_N = 1 << 50


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > MAX_N:
        raise ValueError(f"n={n} above the supported range (2**50)")


def hamming_weight(n: int) -> int:
    """Number of 1-bits in the binary expansion of n (n >= 0)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return int(n).bit_count()


def ceil_log2(n: int) -> int:
    """Smallest d with n <= 2**d, computed from the bit length (exact at
    powers of two, unlike floating-point log)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (n - 1).bit_length()


def t_closed(n: int) -> int:
    """Closed form: with n = sum_j 2^(k_j), k_1 > ... > k_t >= 0, returns
    sum_j (k_j * 2^(k_j - 1) + (j - 1) * 2^(k_j))."""
    _check_n(n)
    total = 0
    higher = 0
    for k in range(n.bit_length() - 1, -1, -1):
        if (n >> k) & 1:
            if k > 0:
                total += k << (k - 1)
            total += higher << k
            higher += 1
    return total


def t_hamming_sum(n: int) -> int:
    """Direct sum H(0) + H(1) + ... + H(n-1)."""
    _check_n(n)
    return sum(k.bit_count() for k in range(n))


def t_recurrence(n: int) -> int:
    """Fold of the increment: start at T(1) = 0 and add H(k) for each vertex
    k = 1..n-1 appended to the prefix set."""
    _check_n(n)
    total = 0
    for k in range(1, n):
        total += k.bit_count()
    return total


def _bounds_formula(n: int) -> tuple[Fraction, int]:
    d = ceil_log2(n)
    return Fraction(n * (d - 1), 4), n * d


def t_bounds(n: int) -> tuple[Fraction, int]:
    """Exact bracketing pair (n*(ceil_log2(n)-1)/4, n*ceil_log2(n)).

    The lower bound is an exact rational so strictness checks never depend on
    float rounding.  Both bounds are strict for n >= 2; n < 2 is rejected
    (T(1) = 0 sits on the upper bound).
    """
    if n < 2:
        raise ValueError(f"bounds require n >= 2, got {n}")
    _check_n(n)
    return _bounds_formula(n)


@dataclass(frozen=True)
class TCountReport:
    """All three T(n) routes plus the bracketing bounds for one n."""

    n: int
    t_closed: int
    t_hamming_sum: int
    t_recurrence: int
    lower_bound: Fraction
    upper_bound: int


def t_report(n: int) -> TCountReport:
    """Compute every route for one n and check they agree before returning."""
    _check_n(n)
    closed = t_closed(n)
    summed = t_hamming_sum(n)
    folded = t_recurrence(n)
    if not (closed == summed == folded):
        raise AssertionError(
            f"T({n}) routes disagree: closed={closed} sum={summed} fold={folded}"
        )
    lower, upper = _bounds_formula(n)
    if n >= 2 and not (lower < closed < upper):
        raise AssertionError(f"T({n})={closed} outside strict bounds ({lower}, {upper})")
    return TCountReport(n, closed, summed, folded, lower, upper)


def hamming_table(limit: int) -> np.ndarray:
    """H(k) for k = 0..limit-1 as an int64 array (batch kernel)."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    return kernels.popcount_table(limit)


def t_closed_table(limit: int) -> np.ndarray:
    """T(n) for n = 0..limit as an int64 array, arr[n] = T(n), arr[0] = 0.

    Uses the vectorized closed-form kernel, independent of the cumulative-sum
    route, so the two can cross-check each other over a whole range.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    if limit > MAX_N:
        raise ValueError(f"limit={limit} above the supported range (2**50)")
    out = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        out[1:] = kernels.t_closed_batch(np.arange(1, limit + 1, dtype=np.int64))
    return out
