import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitdist import hypercube as hc
from unitdist import lattice as lat
from unitdist import tcount

point_sets = st.frozensets(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
    min_size=1,
    max_size=15,
)


def test_construction_validation():
    with pytest.raises(ValueError):
        lat.lattice_points([(0, 0), (0, 0)])
    with pytest.raises(ValueError):
        lat.lattice_points([(0, 0), (0, 1, 2)])
    with pytest.raises(ValueError):
        lat.lattice_points([(1 << 20, 0)])
    with pytest.raises(ValueError):
        lat.lattice_points([])


def test_edge_count_examples():
    assert lat.lattice_edge_count(lat.lattice_points([(0, 0), (1, 0), (2, 0)])) == 2
    assert lat.lattice_edge_count(lat.lattice_points([(0, 0)])) == 0
    square = lat.lattice_points([(0, 0), (0, 1), (1, 0), (1, 1)])
    assert lat.lattice_edge_count(square) == 4


def test_normalize():
    s = lat.normalize(lat.lattice_points([(2, -1), (3, 5)]))
    assert s.point_set() == {(0, 0), (1, 6)}


def test_coordinate_max():
    maxima, m = lat.coordinate_max(lat.lattice_points([(0, 0), (2, 1)]))
    assert maxima == (2, 1) and m == 2
    maxima, m = lat.coordinate_max(lat.lattice_points([(0,)]))
    assert maxima == (0,) and m == 0
    with pytest.raises(ValueError):
        lat.coordinate_max(lat.lattice_points([(-1, 0)]))
    with pytest.raises(ValueError):
        lat.coordinate_max(lat.LatticePointSet(2, np.empty((0, 2), dtype=np.int64)))


def test_compress_once_example():
    path = lat.lattice_points([(0, 0), (1, 0), (2, 0)])
    out = lat.compress_once(path, 0)
    assert out.point_set() == {(0, 0, 0), (0, 1, 0), (1, 1, 0)}
    assert lat.lattice_edge_count(out) == 2


def test_compress_once_other_axis():
    column = lat.lattice_points([(0, 0), (0, 1), (0, 2)])
    out = lat.compress_once(column, 1)
    assert out.point_set() == {(0, 0, 0), (0, 0, 1), (1, 0, 1)}
    assert lat.lattice_edge_count(out) == 2


def test_compress_once_guards():
    cube01 = lat.lattice_points([(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        lat.compress_once(cube01, 0)
    path = lat.lattice_points([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(ValueError):
        lat.compress_once(path, 1)  # coordinate 1 does not attain the max


def test_compress_to_cube_grid():
    grid = lat.lattice_points([(x, y) for x in range(3) for y in range(3)])
    assert lat.lattice_edge_count(grid) == 12
    cube = lat.compress_to_cube(grid)
    assert len(cube) == 9
    assert hc.edge_count(cube) == 12


def test_compress_to_cube_already_binary():
    s = lat.lattice_points([(0, 0), (1, 0), (1, 1)])
    cube = lat.compress_to_cube(s)
    assert len(cube) == 3
    assert hc.edge_count(cube) == lat.lattice_edge_count(s) == 2


def test_compress_to_cube_singleton_and_empty():
    single = lat.compress_to_cube(lat.lattice_points([(5, 0)]))
    assert single.dim == 1 and single.to_set() == {0}
    empty = lat.compress_to_cube(lat.LatticePointSet(2, np.empty((0, 2), dtype=np.int64)))
    assert len(empty) == 0


@settings(deadline=None)
@given(point_sets)
def test_compression_preserves_counts(pts):
    s = lat.lattice_points(pts)
    n, e = len(s), lat.lattice_edge_count(s)
    cur = lat.normalize(s)
    iterations = 0
    bound = sum(max(m - 1, 0) for m in lat.coordinate_max(cur)[0])
    while True:
        maxima, m = lat.coordinate_max(cur)
        if m <= 1:
            break
        nxt = lat.compress_once(cur, maxima.index(m))
        assert len(nxt) == n
        assert lat.lattice_edge_count(nxt) == lat.lattice_edge_count(cur)
        cur = nxt
        iterations += 1
        assert iterations <= bound
    cube = lat.compress_to_cube(s)
    assert len(cube) == n
    assert hc.edge_count(cube) == e


@settings(deadline=None)
@given(point_sets)
def test_edge_count_never_beats_formula(pts):
    s = lat.lattice_points(pts)
    assert lat.lattice_edge_count(s) <= tcount.t_closed(len(s))
