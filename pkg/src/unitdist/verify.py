"""Composite self-checks wired into the CLI ``verify-all`` subcommand.

Every check compares two independent routes to the same quantity (formula vs
formula, construction vs oracle, plane vs cube) and reports pass/fail with
the expected and observed values.  Reports are deterministic for a fixed
seed and configuration, down to the byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import hypercube, lattice, oracle, planar, tcount
from .directions import DirectionSet, check_good, random_good_directions

SEED_DEFAULT = 42
FORMULA_N_CAP = 10**6
PLANAR_N_CAP = 256
ARRANGE_TRIALS_DEFAULT = 10_000
COMPRESS_TRIALS_DEFAULT = 1_000

# 14-vertex golden example in dimension 5 with its four rearrangements
GOLDEN_T = (0, 1, 9, 10, 11, 19, 23, 24, 25, 26, 27, 28, 29, 30)
GOLDEN_T_FLIP4 = (3, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17, 25, 26, 27)
GOLDEN_T_HORIZONTAL = (0, 1, 2, 3, 4, 16, 17, 18, 19, 20, 21, 22, 23, 24)
GOLDEN_T_VERTICAL = (0, 1, 2, 3, 8, 9, 10, 11, 12, 13, 14, 15, 24, 25)
GOLDEN_T_COMPLETE = tuple(range(14))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: str
    got: str

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "expected": self.expected,
            "got": self.got,
        }


def _result(name: str, passed: bool, expected, got) -> CheckResult:
    return CheckResult(name, bool(passed), str(expected), str(got))


def check_formula_triple_equality(max_n: int) -> CheckResult:
    limit = min(max_n, FORMULA_N_CAP)
    closed = tcount.t_closed_table(limit)
    weights = tcount.hamming_table(limit)
    summed = np.cumsum(weights)
    eq = np.array_equal(closed[1:], summed)
    inc = np.array_equal(np.diff(closed), weights)
    spots = [1, 2, 3, limit // 2 or 1, limit]
    scalar_ok = all(tcount.t_closed(n) == int(closed[n]) for n in spots)
    ok = eq and inc and scalar_ok
    return _result(
        "formula_triple_equality",
        ok,
        f"closed == cumulative sum and increment == H(n) for n <= {limit}",
        "all equal" if ok else f"equality={eq} increment={inc} scalar={scalar_ok}",
    )


def check_power_of_two_values() -> CheckResult:
    bad = []
    if tcount.t_closed(1) != 0:
        bad.append((1, tcount.t_closed(1), 0))
    for d in range(1, 21):
        got = tcount.t_closed(1 << d)
        want = d << (d - 1)
        if got != want:
            bad.append((1 << d, got, want))
    return _result(
        "power_of_two_values",
        not bad,
        "T(1)=0 and T(2^d) = d*2^(d-1) for d <= 20",
        "all exact" if not bad else f"mismatches {bad}",
    )


def check_bounds_strict(max_n: int) -> CheckResult:
    limit = min(max_n, FORMULA_N_CAP)
    ns = np.arange(2, limit + 1, dtype=np.int64)
    closed = tcount.t_closed_table(limit)[2:]
    d = np.frexp((ns - 1).astype(np.float64))[1].astype(np.int64)
    lower_ok = ns * (d - 1) < 4 * closed  # exact: compare numerators over /4
    upper_ok = closed < ns * d
    ok = bool(lower_ok.all() and upper_ok.all())
    return _result(
        "bounds_strict",
        ok,
        f"n*(ceil_log2(n)-1)/4 < T(n) < n*ceil_log2(n) strictly for 2 <= n <= {limit}",
        "all strict" if ok else
        f"first lower fail n={ns[~lower_ok][0] if not lower_ok.all() else None}, "
        f"first upper fail n={ns[~upper_ok][0] if not upper_ok.all() else None}",
    )


def _cube_oracle_all_sizes(d: int, budget: int) -> CheckResult:
    bad = []
    for n in range(0, (1 << d) + 1):
        res = oracle.cube_max_edges(d, n, budget)
        formula = tcount.t_closed(n) if n >= 1 else 0
        arranged = hypercube.edge_count(hypercube.prefix_set(d, n))
        if not res.max_edges == formula == arranged:
            bad.append((n, res.max_edges, formula, arranged))
    return _result(
        f"cube_oracle_d{d}",
        not bad,
        f"exhaustive max == formula == arranged-prefix edges for every n <= {1 << d}",
        "all equal" if not bad else f"mismatches {bad}",
    )


def check_cube_oracle(budget: int) -> list[CheckResult]:
    out = [_cube_oracle_all_sizes(d, budget) for d in range(1, 5)]
    bad = []
    for n in (4, 8, 28, 30):
        res = oracle.cube_max_edges(5, n, budget)
        formula = tcount.t_closed(n)
        if res.max_edges != formula:
            bad.append((n, res.max_edges, formula))
    out.append(
        _result(
            "cube_oracle_d5_spot",
            not bad,
            "exhaustive max == formula at n in (4, 8, 28, 30)",
            "all equal" if not bad else f"mismatches {bad}",
        )
    )
    return out


def check_arrange_random(trials: int, seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    failures = 0
    first = ""
    for t in range(trials):
        d = int(rng.integers(1, 11))
        size = int(rng.integers(0, (1 << d) + 1))
        verts = rng.choice(1 << d, size=size, replace=False)
        v = hypercube.CubeVertexSet(d, verts)
        try:
            arranged, trace = hypercube.total_arrange(v)
        except AssertionError as exc:
            failures += 1
            first = first or f"trial {t}: {exc}"
            continue
        edges = [trace.initial_edges] + [s.edges for s in trace.steps]
        monotone = all(a <= b for a, b in zip(edges, edges[1:]))
        expected = tcount.t_closed(size) if size >= 1 else 0
        if not (
            arranged == hypercube.prefix_set(d, size)
            and monotone
            and trace.final_edges == expected
        ):
            failures += 1
            first = first or f"trial {t}: d={d} n={size}"
    return _result(
        "arrange_random_subsets",
        failures == 0,
        f"{trials} random subsets (d <= 10) arrange to the prefix with "
        "monotone traces and formula-exact final edges",
        "all pass" if failures == 0 else f"{failures} failures; first: {first}",
    )


def check_compression(trials: int, seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    failures = 0
    first = ""
    for t in range(trials):
        npts = int(rng.integers(1, 21))
        cells = rng.choice(6 ** 3, size=npts, replace=False)
        pts = np.column_stack([cells // 36, (cells // 6) % 6, cells % 6])
        s = lattice.LatticePointSet(3, pts)
        e0 = lattice.lattice_edge_count(s)
        cur = lattice.normalize(s)
        ok = True
        while True:
            maxima, m = lattice.coordinate_max(cur)
            if m <= 1:
                break
            nxt = lattice.compress_once(cur, maxima.index(m))
            if len(nxt) != len(cur) or lattice.lattice_edge_count(nxt) != lattice.lattice_edge_count(cur):
                ok = False
                break
            cur = nxt
        cube = lattice.compress_to_cube(s)
        if not (ok and len(cube) == npts and hypercube.edge_count(cube) == e0):
            failures += 1
            first = first or f"trial {t}: n={npts} edges={e0}"
    return _result(
        "compression_conservation",
        failures == 0,
        f"{trials} random subsets of [0,5]^3 keep vertex and edge counts "
        "through every compression step",
        "all pass" if failures == 0 else f"{failures} failures; first: {first}",
    )


def check_directions(seed: int) -> CheckResult:
    problems = []
    bad = check_good(DirectionSet((0.0, 2.0 * math.pi / 3.0)), 1)
    if not (
        bad.verdict == "bad"
        and bad.witness == (1, 1)
        and bad.residual is not None
        and bad.residual < 1e-12
    ):
        problems.append(f"(0, 2pi/3) certificate: {bad}")
    ortho = check_good(DirectionSet((0.0, math.pi / 2.0)), 3)
    if not ortho.is_good:
        problems.append(f"(0, pi/2) at bound 3: {ortho}")
    for s in range(100):
        d = (s % 10) + 1
        try:
            got = random_good_directions(d, 1, seed + s)
        except RuntimeError as exc:
            problems.append(f"seed {seed + s} d={d}: {exc}")
            break
        if not check_good(got, 1).is_good:
            problems.append(f"seed {seed + s} d={d}: output fails re-certification")
            break
    return _result(
        "directions_certification",
        not problems,
        "(0,2pi/3) rejected with witness (1,1); (0,pi/2) good at bound 3; "
        "sampling succeeds for 100 seeds at d <= 10",
        "all pass" if not problems else "; ".join(problems),
    )


def check_golden_example() -> CheckResult:
    t = hypercube.vertex_set(5, GOLDEN_T)
    problems = []
    part = hypercube.partition_edges(t)
    if part.e_hor != 2:
        problems.append(f"e_hor={part.e_hor}")
    if part.e_vert != 3:
        problems.append(f"e_vert={part.e_vert}")
    cases = [
        ("flip4", hypercube.flip_coordinate(t, 4), GOLDEN_T_FLIP4),
        ("horizontal", hypercube.horizontal_arrange(t), GOLDEN_T_HORIZONTAL),
        ("vertical", hypercube.vertical_arrange(t), GOLDEN_T_VERTICAL),
        ("complete", hypercube.total_arrange(t)[0], GOLDEN_T_COMPLETE),
    ]
    for label, got, want in cases:
        if got != hypercube.vertex_set(5, want):
            problems.append(f"{label}: {sorted(got.to_set())}")
    return _result(
        "golden_block_example",
        not problems,
        "e_hor=2, e_vert=3 and the four rearrangement arrays match vertex-for-vertex",
        "all match" if not problems else "; ".join(problems),
    )


def check_planar_extremal(max_n: int, seed: int, tol: float) -> CheckResult:
    limit = min(max_n, PLANAR_N_CAP)
    dirsets = {}
    failures = 0
    first = ""
    for n in range(1, limit + 1):
        d = planar.required_dim(n)
        if d not in dirsets:
            dirsets[d] = random_good_directions(d, 1, seed * 1000 + d)
        res = planar.verify_extremal(n, dirsets[d], tol=tol)
        if not res.ok:
            failures += 1
            first = first or f"n={n}: count={res.count} expected={res.expected} dirs_ok={res.directions_ok}"
    return _result(
        "planar_extremal",
        failures == 0,
        f"constructed configurations hit the formula count with configured "
        f"directions for every n <= {limit}",
        "all pass" if failures == 0 else f"{failures} failures; first: {first}",
    )


def verify_all(
    max_n: int = FORMULA_N_CAP,
    seed: int = SEED_DEFAULT,
    budget: int = 20_000_000,
    tol: float = 1e-9,
    arrange_trials: int = ARRANGE_TRIALS_DEFAULT,
    compress_trials: int = COMPRESS_TRIALS_DEFAULT,
) -> dict:
    """Run every composite check and return the machine-readable report."""
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    checks = [
        check_formula_triple_equality(max_n),
        check_power_of_two_values(),
        check_bounds_strict(max_n),
        *check_cube_oracle(budget),
        check_arrange_random(arrange_trials, seed),
        check_compression(compress_trials, seed),
        check_directions(seed),
        check_golden_example(),
        check_planar_extremal(max_n, seed, tol),
    ]
    checks.sort(key=lambda c: c.name)
    return {
        "schema": "edgemax/1",
        "seed": seed,
        "max_n": max_n,
        "passed": all(c.passed for c in checks),
        "checks": [c.as_dict() for c in checks],
    }
