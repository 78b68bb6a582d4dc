"""Coherence, discord and classical correlation of two-qubit Bell-diagonal
states, and their dynamics under Pauli flip channels."""

from .channels import (
    ChannelKind,
    ChannelSpec,
    apply_channel_both,
    evolve_params,
    kraus_operators,
    noise_strength,
)
from .dynamics import (
    Trajectory,
    TransitionReport,
    detect_sudden_change,
    empirical_frozen_check,
    frozen_family_predicate,
    role_table,
    sweep_trajectory,
    transition_time_analytic,
)
from .entropy import cc_kernel, relative_entropy, shannon_entropy, von_neumann_entropy
from .errors import *  # noqa: F401,F403
from .measures import (
    MeasureSet,
    classical_correlation,
    classify_region,
    coherence_l1,
    coherence_l1_matrix,
    coherence_rel,
    coherence_rel_matrix,
    measure_set,
    mutual_information,
    optimal_axis,
    quantum_discord,
)
from .oracle import (
    GridSpec,
    QubitMeasurementBasis,
    conditional_entropy,
    discord_one_side,
    discord_relative_entropy,
    discord_two_side,
    verify_theorem1,
    verify_theorem2,
)
from .qstate import (
    BellDiagonalParams,
    PauliAxis,
    bell_eigenvalues,
    from_density_matrix,
    is_physical,
    random_physical_params,
    reduced_state,
    to_density_matrix,
)

__version__ = "0.1.0"
