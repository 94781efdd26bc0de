"""Acceptance suite: one test per acceptance criterion, each printing a
single PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s``).

Runtime limits are asserted against the stated budgets; JIT warmup happens
in the shared fixture so compile time is not billed to any criterion.
"""

import math
import time

import numpy as np
import pytest

from unitdist import hypercube as hc
from unitdist import lattice as lat
from unitdist import planar, tcount
from unitdist.directions import DirectionSet, check_good, random_good_directions
from unitdist.oracle import cube_max_edges

SEED = 20240801

GOLDEN_T = (0, 1, 9, 10, 11, 19, 23, 24, 25, 26, 27, 28, 29, 30)
GOLDEN_T_FLIP4 = (3, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17, 25, 26, 27)
GOLDEN_T_HORIZONTAL = (0, 1, 2, 3, 4, 16, 17, 18, 19, 20, 21, 22, 23, 24)
GOLDEN_T_VERTICAL = (0, 1, 2, 3, 8, 9, 10, 11, 12, 13, 14, 15, 24, 25)


def report(criterion: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {criterion} [{name}]: {status}{suffix}")
    assert ok, f"criterion {criterion} ({name}) failed{suffix}"


@pytest.fixture(scope="module", autouse=True)
def _warm(warm_kernels):
    # touch every jitted path once before any timed section
    cube_max_edges(2, 2)
    hc.total_arrange(hc.vertex_set(3, [0, 5, 6]))
    tcount.t_closed_table(16)
    return warm_kernels


def test_criterion_1_formula_triple_equality():
    limit = 10**6
    t0 = time.perf_counter()
    closed = tcount.t_closed_table(limit)
    weights = tcount.hamming_table(limit)
    hamming_sum = np.cumsum(weights)
    routes_equal = np.array_equal(closed[1:], hamming_sum)
    increments = np.array_equal(np.diff(closed), weights)
    elapsed = time.perf_counter() - t0
    report(
        1,
        "formula_triple_equality",
        routes_equal and increments and elapsed < 5.0,
        f"n<=10^6 in {elapsed:.2f}s",
    )


def test_criterion_2_closed_values_and_strict_bounds():
    ok = tcount.t_closed(1) == 0
    for d in range(1, 21):
        ok = ok and tcount.t_closed(1 << d) == d * (1 << (d - 1))
    limit = 10**6
    ns = np.arange(2, limit + 1, dtype=np.int64)
    closed = tcount.t_closed_table(limit)[2:]
    d = np.frexp((ns - 1).astype(np.float64))[1].astype(np.int64)
    # lower bound n*(d-1)/4 compared exactly via the numerator against 4*T
    strict = bool((ns * (d - 1) < 4 * closed).all() and (closed < ns * d).all())
    report(2, "closed_form_values_and_bounds", ok and strict, f"bounds strict to n={limit}")


def test_criterion_3_cube_oracle_equivalence():
    t0 = time.perf_counter()
    ok = True
    detail = ""
    for d in range(1, 5):
        for n in range(0, (1 << d) + 1):
            res = cube_max_edges(d, n)
            formula = tcount.t_closed(n) if n else 0
            arranged = hc.edge_count(hc.prefix_set(d, n))
            if not res.max_edges == formula == arranged:
                ok = False
                detail = f"d={d} n={n}: oracle={res.max_edges} formula={formula} arranged={arranged}"
                break
    for n in (4, 8, 28, 30):
        res = cube_max_edges(5, n)
        if res.max_edges != tcount.t_closed(n):
            ok = False
            detail = f"d=5 n={n}: oracle={res.max_edges}"
    elapsed = time.perf_counter() - t0
    report(3, "cube_oracle_equivalence", ok and elapsed < 30.0, detail or f"{elapsed:.2f}s")


def test_criterion_4_arrangement_soundness():
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    ok = True
    detail = ""
    for trial in range(10_000):
        d = int(rng.integers(1, 11))
        n = int(rng.integers(0, (1 << d) + 1))
        verts = rng.choice(1 << d, size=n, replace=False)
        arranged, trace = hc.total_arrange(hc.CubeVertexSet(d, verts))
        edges = [trace.initial_edges] + [s.edges for s in trace.steps]
        expected = tcount.t_closed(n) if n else 0
        if not (
            arranged == hc.prefix_set(d, n)
            and all(a <= b for a, b in zip(edges, edges[1:]))
            and trace.final_edges == expected
        ):
            ok = False
            detail = f"trial {trial}: d={d} n={n}"
            break
    elapsed = time.perf_counter() - t0
    report(4, "arrangement_soundness", ok and elapsed < 60.0, detail or f"10000 subsets in {elapsed:.2f}s")


def test_criterion_5_golden_block_example():
    t = hc.vertex_set(5, GOLDEN_T)
    part = hc.partition_edges(t)
    ok = part.e_hor == 2 and part.e_vert == 3
    ok = ok and hc.flip_coordinate(t, 4) == hc.vertex_set(5, GOLDEN_T_FLIP4)
    ok = ok and hc.horizontal_arrange(t) == hc.vertex_set(5, GOLDEN_T_HORIZONTAL)
    ok = ok and hc.vertical_arrange(t) == hc.vertex_set(5, GOLDEN_T_VERTICAL)
    ok = ok and hc.total_arrange(t)[0] == hc.prefix_set(5, 14)
    report(5, "golden_block_example", ok, f"e_hor={part.e_hor} e_vert={part.e_vert}")


def test_criterion_6_compression_conservation():
    rng = np.random.default_rng(SEED)
    ok = True
    detail = ""
    for trial in range(1000):
        npts = int(rng.integers(1, 21))
        cells = rng.choice(216, size=npts, replace=False)
        pts = np.column_stack([cells // 36, (cells // 6) % 6, cells % 6])
        s = lat.LatticePointSet(3, pts)
        edges = lat.lattice_edge_count(s)
        cur = lat.normalize(s)
        while True:
            maxima, m = lat.coordinate_max(cur)
            if m <= 1:
                break
            nxt = lat.compress_once(cur, maxima.index(m))
            if len(nxt) != npts or lat.lattice_edge_count(nxt) != edges:
                ok = False
                detail = f"trial {trial}: intermediate step broke counts"
                break
            cur = nxt
        cube = lat.compress_to_cube(s)
        if not (ok and len(cube) == npts and hc.edge_count(cube) == edges):
            ok = False
            detail = detail or f"trial {trial}: final cube broke counts"
            break
    report(6, "compression_conservation", ok, detail or "1000 subsets of [0,5]^3")


def test_criterion_7_direction_certification():
    skew = DirectionSet((0.0, 2.0 * math.pi / 3.0))
    cert = check_good(skew, 1)
    ok = cert.verdict == "bad" and cert.witness == (1, 1) and cert.residual < 1e-12
    for delta in (1e-12, 1e-9, 1e-6, 1e-3):
        ok = ok and check_good(skew, 1, delta=delta).verdict == "bad"
    ok = ok and check_good(DirectionSet((0.0, math.pi / 2.0)), 3).is_good
    detail = f"witness={cert.witness} residual={cert.residual:.2e}"
    for s in range(100):
        d = (s % 10) + 1
        try:
            sampled = random_good_directions(d, 1, SEED + s, retry_limit=1000)
        except RuntimeError:
            ok = False
            detail = f"sampling failed at seed {SEED + s} (d={d})"
            break
        if not check_good(sampled, 1).is_good:
            ok = False
            detail = f"re-certification failed at seed {SEED + s} (d={d})"
            break
    report(7, "direction_certification", ok, detail)


def test_criterion_8_planar_configurations_extremal():
    t0 = time.perf_counter()
    dirsets = {}
    ok = True
    detail = ""
    for n in range(1, 257):
        d = planar.required_dim(n)
        if d not in dirsets:
            dirsets[d] = random_good_directions(d, 1, SEED * 100 + d)
        res = planar.verify_extremal(n, dirsets[d], tol=1e-9)
        if not res.ok:
            ok = False
            detail = f"n={n}: count={res.count} expected={res.expected} dirs_ok={res.directions_ok}"
            break
    elapsed = time.perf_counter() - t0
    report(8, "planar_configurations_extremal", ok and elapsed < 10.0, detail or f"n<=256 in {elapsed:.2f}s")
