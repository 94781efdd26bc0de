"""Extremal unit-distance counts for planar configurations whose distinct
unit directions are rationally independent, with the equivalent hypercube and
integer-lattice edge-maximization machinery and brute-force oracles."""

from .directions import DirectionSet, GoodnessCertificate, check_good, random_good_directions
from .errors import BudgetExceededError, ToleranceAmbiguityError
from .hypercube import (
    ArrangeTrace,
    BlockDecomposition,
    CubeVertexSet,
    block_decomposition,
    edge_count,
    flip_coordinate,
    horizontal_arrange,
    partition_edges,
    prefix_set,
    swap_blocks_cd,
    swap_coordinates,
    total_arrange,
    vertex_set,
    vertical_arrange,
)
from .lattice import (
    LatticePointSet,
    compress_once,
    compress_to_cube,
    coordinate_max,
    lattice_edge_count,
    lattice_points,
    normalize,
)
from .oracle import OracleResult, box_max_edges, cube_max_edges
from .planar import (
    PlanarConfig,
    UnitDistanceReport,
    build_config,
    canonicalize,
    count_unit_distances,
    required_dim,
    verify_extremal,
)
from .tcount import (
    TCountReport,
    ceil_log2,
    hamming_table,
    hamming_weight,
    t_bounds,
    t_closed,
    t_closed_table,
    t_hamming_sum,
    t_recurrence,
    t_report,
)
from .verify import verify_all

__version__ = "0.1.0"
