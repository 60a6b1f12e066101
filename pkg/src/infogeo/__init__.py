"""Classical fidelity limits, state-space volumes, packing bounds and outcome regions."""

from .fidelity import (
    classical_fidelity_equimodular,
    classical_fidelity_equimodular_params,
    classical_fidelity_general,
    classical_fidelity_general_params,
    fidelity_bound,
    mc_classical_fidelity_equimodular,
)
from .packing import (
    PACKING_DENSITY,
    distinguishable_state_count,
    entropy_number_bound,
    log_entropy_number_bound,
    sudakov_packing_bounds,
    sudakov_threshold,
)
from .region import outcome_probabilities, outcome_region_fraction, qutrit_outcome_region_fraction
from .types import (
    Evaluation,
    FidelityBound,
    FidelityKind,
    MonteCarloEstimate,
    PackingBounds,
    RegionEstimate,
    VolumeReport,
    VolumeSpace,
)
from .volumes import (
    log_volume_ball,
    log_volume_equimodular,
    log_volume_projective,
    log_volume_ratio,
    log_volume_ratio_sphere,
    log_volume_sphere,
    log_volume_sphere_asymptotic,
    volume_ball,
    volume_equimodular,
    volume_projective,
    volume_projective_printed_quotient,
    volume_ratio,
    volume_ratio_asymptotic_base,
    volume_ratio_sphere,
    volume_report,
    volume_sphere,
    volume_sphere_asymptotic,
)

__all__ = [
    "Evaluation",
    "FidelityBound",
    "FidelityKind",
    "MonteCarloEstimate",
    "PACKING_DENSITY",
    "PackingBounds",
    "RegionEstimate",
    "VolumeReport",
    "VolumeSpace",
    "classical_fidelity_equimodular",
    "classical_fidelity_equimodular_params",
    "classical_fidelity_general",
    "classical_fidelity_general_params",
    "distinguishable_state_count",
    "entropy_number_bound",
    "fidelity_bound",
    "log_entropy_number_bound",
    "log_volume_ball",
    "log_volume_equimodular",
    "log_volume_projective",
    "log_volume_ratio",
    "log_volume_ratio_sphere",
    "log_volume_sphere",
    "log_volume_sphere_asymptotic",
    "mc_classical_fidelity_equimodular",
    "outcome_probabilities",
    "outcome_region_fraction",
    "qutrit_outcome_region_fraction",
    "sudakov_packing_bounds",
    "sudakov_threshold",
    "volume_ball",
    "volume_equimodular",
    "volume_projective",
    "volume_projective_printed_quotient",
    "volume_ratio",
    "volume_ratio_asymptotic_base",
    "volume_ratio_sphere",
    "volume_report",
    "volume_sphere",
    "volume_sphere_asymptotic",
]
