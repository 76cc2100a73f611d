"""Joint topology inference for families of related graphs with hidden nodes."""

from .graphs import (
    GraphEnsemble,
    Gso,
    GsoBlocks,
    NodePartition,
    generate_er,
    matrix_blocks,
    partition_blocks,
    perturb_related,
    reassemble,
    select_hidden,
)
from .metrics import normalized_error
from .signals import (
    CovarianceSet,
    FilterCoeffs,
    cov_mrf,
    cov_poly,
    graph_filter,
    random_filter_coeffs,
    sample_covariance,
    sample_signals,
)
from .solver import (
    AdmmOptions,
    SolverConfig,
    SolverResult,
    objective_value,
    solve_inner,
    solve_reweighted,
    update_weights,
)

__version__ = "0.1.0"
