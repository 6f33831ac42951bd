"""Stationary pairwise quantum correlations between spin-chain eigenmodes.

Build an open spin-1/2 XY chain, diagonalize its single-excitation sector,
and compute the time-independent pairwise discord and concurrence carried by
the Hamiltonian eigenmodes for a single excited or single polarized site.
"""

from .analysis import (
    ClusterReport,
    WeightClass,
    cluster_report,
    distinct_values,
    equal_weight_classes,
    extract_clusters,
    predict_zero_nodes,
    spread,
    zero_weight_nodes,
)
from .chains import ChainSpec, build_chain, build_couplings, build_hamiltonian
from .correlations import (
    EtaSweepReport,
    StateValidityError,
    StationaryProfile,
    XState,
    concurrence_excited,
    concurrence_wootters,
    correlation_matrix,
    discord_excited_closed,
    discord_excited_sides,
    discord_measurement_oracle,
    discord_polarized_closed,
    discord_polarized_sides,
    discord_xstate,
    reduced_xstate,
    stationary_profile,
    verify_eta_minimum,
)
from .dynamics import (
    EigenbasisState,
    StationarityReport,
    evolve,
    initial_excited_state,
    stationarity_report,
)
from .spectral import (
    ConvergenceError,
    SpectralDecomposition,
    analytic_alternating_limit,
    analytic_homogeneous,
    diagonalize,
    jacobi_eigh,
)

__version__ = "0.1.0"

__all__ = [
    "ChainSpec",
    "ClusterReport",
    "ConvergenceError",
    "EigenbasisState",
    "EtaSweepReport",
    "SpectralDecomposition",
    "StateValidityError",
    "StationarityReport",
    "StationaryProfile",
    "WeightClass",
    "XState",
    "analytic_alternating_limit",
    "analytic_homogeneous",
    "build_chain",
    "build_couplings",
    "build_hamiltonian",
    "cluster_report",
    "concurrence_excited",
    "concurrence_wootters",
    "correlation_matrix",
    "diagonalize",
    "discord_excited_closed",
    "discord_excited_sides",
    "discord_measurement_oracle",
    "discord_polarized_closed",
    "discord_polarized_sides",
    "discord_xstate",
    "distinct_values",
    "equal_weight_classes",
    "evolve",
    "extract_clusters",
    "initial_excited_state",
    "jacobi_eigh",
    "predict_zero_nodes",
    "reduced_xstate",
    "spread",
    "stationarity_report",
    "stationary_profile",
    "verify_eta_minimum",
    "zero_weight_nodes",
    "__version__",
]
