"""Spectral and random-walk analysis of simplicial complexes.

Build a complex from its facets, assemble weighted boundary operators and
Hodge Laplacians, read homology off their kernels two independent ways,
relate the Laplacians to signed graphs and orientability, and run the walk
families whose evolution operators are affine in those Laplacians.
"""
from .chains import (
    Cochain,
    OperatorMatrix,
    adjoint_coboundary_matrix,
    boundary_matrix,
    coboundary_matrix,
    inner_product,
    simplex_labels,
)
from .complexes import (
    OrientedSimplex,
    Simplex,
    SimplicialComplex,
    WeightFunction,
    boundary_sign,
    build_from_facets,
    weight_by_kind,
)
from .exactrank import integer_rank
from .hodge import (
    BettiMismatchError,
    KERNEL_RTOL,
    SpectralDecomposition,
    betti,
    betti_exact,
    betti_spectral,
    down_laplacian,
    essential_gap,
    full_laplacian,
    hodge_decompose,
    smallest_nonzero,
    spectral_gap,
    spectrum,
    up_laplacian,
)
from .montecarlo import MonteCarloResult, oriented_marginal_difference, run_monte_carlo
from .orientation import (
    OrientabilityResult,
    OrientationAssignment,
    assignment_induces,
    extend_closing_boundary,
    free_faces,
    is_disorientable,
    is_orientable,
)
from .signed_graphs import (
    BalanceResult,
    SignedGraph,
    Switching,
    down_signed_graph,
    is_antibalanced,
    is_balanced,
    signed_laplacian,
    up_signed_graph,
    verify_down_relation,
    verify_up_relation,
)
from .walks import (
    ConvergenceResult,
    DEATH_LABEL,
    Distribution,
    ExpectationProcess,
    FreeFacesError,
    GraphTypeWalk,
    NotOrientableError,
    StationaryResult,
    WalkConfig,
    WalkStateSpace,
    antisymmetrizer,
    down_convergence_rate,
    down_limit_matrix,
    down_propagation_matrix,
    down_walk_matrix,
    exactness_residuals,
    expectation_process_down,
    expectation_process_up,
    graph_type_convergence_rate,
    graph_type_down_walk,
    graph_walk_matrix,
    projected_limit_span,
    stationary_distribution,
    stationary_independence,
    up_convergence_rate,
    up_limit_matrix,
    up_transition_operator,
    up_walk_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "Cochain",
    "OperatorMatrix",
    "adjoint_coboundary_matrix",
    "boundary_matrix",
    "coboundary_matrix",
    "inner_product",
    "simplex_labels",
    "OrientedSimplex",
    "Simplex",
    "SimplicialComplex",
    "WeightFunction",
    "boundary_sign",
    "build_from_facets",
    "weight_by_kind",
    "integer_rank",
    "BettiMismatchError",
    "KERNEL_RTOL",
    "SpectralDecomposition",
    "betti",
    "betti_exact",
    "betti_spectral",
    "down_laplacian",
    "essential_gap",
    "full_laplacian",
    "hodge_decompose",
    "smallest_nonzero",
    "spectral_gap",
    "spectrum",
    "up_laplacian",
    "MonteCarloResult",
    "oriented_marginal_difference",
    "run_monte_carlo",
    "OrientabilityResult",
    "OrientationAssignment",
    "assignment_induces",
    "extend_closing_boundary",
    "free_faces",
    "is_disorientable",
    "is_orientable",
    "BalanceResult",
    "SignedGraph",
    "Switching",
    "down_signed_graph",
    "is_antibalanced",
    "is_balanced",
    "signed_laplacian",
    "up_signed_graph",
    "verify_down_relation",
    "verify_up_relation",
    "ConvergenceResult",
    "DEATH_LABEL",
    "Distribution",
    "ExpectationProcess",
    "FreeFacesError",
    "GraphTypeWalk",
    "NotOrientableError",
    "StationaryResult",
    "WalkConfig",
    "WalkStateSpace",
    "antisymmetrizer",
    "down_convergence_rate",
    "down_limit_matrix",
    "down_propagation_matrix",
    "down_walk_matrix",
    "exactness_residuals",
    "expectation_process_down",
    "expectation_process_up",
    "graph_type_convergence_rate",
    "graph_type_down_walk",
    "graph_walk_matrix",
    "projected_limit_span",
    "stationary_distribution",
    "stationary_independence",
    "up_convergence_rate",
    "up_limit_matrix",
    "up_transition_operator",
    "up_walk_matrix",
]
