import numpy as np
import pytest

from unitdist import kernels


@pytest.fixture(scope="session")
def warm_kernels():
    """Trigger JIT compilation outside any timed section."""
    kernels.popcount_table(8)
    kernels.t_closed_batch(np.arange(1, 4, dtype=np.int64))
    occ = np.zeros(4, dtype=np.bool_)
    occ[:2] = True
    kernels.dense_edge_count(occ, 2)
    kernels.sparse_edge_count(np.arange(2, dtype=np.int64), 2)
    kernels.max_edges_enumerate(np.array([2, 1], dtype=np.int64), 1)
    return kernels.BACKEND
