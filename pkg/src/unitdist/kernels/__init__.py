"""Backend selection for the hot numeric kernels.

Two interchangeable implementations exist: numba-jitted loops
(:mod:`unitdist.kernels.numba_impl`) and vectorized numpy
(:mod:`unitdist.kernels.numpy_impl`).  The numba backend is the default;
set the environment variable ``UNITDIST_NO_NUMBA=1`` before import to force
the numpy fallback (it is also used automatically when numba is missing).
``bench/benchmark.py`` times the two against each other.
"""

import os

__all__ = [
    "BACKEND",
    "popcount_table",
    "t_closed_batch",
    "dense_edge_count",
    "sparse_edge_count",
    "max_edges_enumerate",
]


def _numpy_forced() -> bool:
    return os.environ.get("UNITDIST_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}


if _numpy_forced():
    from . import numpy_impl as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_impl as _impl

        BACKEND = "numba"
    except ImportError:
        from . import numpy_impl as _impl

        BACKEND = "numpy"

popcount_table = _impl.popcount_table
t_closed_batch = _impl.t_closed_batch
dense_edge_count = _impl.dense_edge_count
sparse_edge_count = _impl.sparse_edge_count
max_edges_enumerate = _impl.max_edges_enumerate
