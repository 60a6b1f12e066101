from .errors import DimensionMismatchError
from .linalg import (
    apply_unitary,
    as_density,
    born_probabilities,
    computational_basis,
    dagger,
    density_from_state,
    equal_up_to_global_phase,
    fidelity,
    ket,
    maximally_mixed,
    partial_trace_first,
    project_outcome,
    project_outcome_mixed,
    pure_state_distance,
    purity,
    random_state,
    random_unitary,
    tensor,
)
from .types import DensityMatrix, MeasurementBasis, PureState, UnitaryOp

__all__ = [
    "DensityMatrix",
    "DimensionMismatchError",
    "MeasurementBasis",
    "PureState",
    "UnitaryOp",
    "apply_unitary",
    "as_density",
    "born_probabilities",
    "computational_basis",
    "dagger",
    "density_from_state",
    "equal_up_to_global_phase",
    "fidelity",
    "ket",
    "maximally_mixed",
    "partial_trace_first",
    "project_outcome",
    "project_outcome_mixed",
    "pure_state_distance",
    "purity",
    "random_state",
    "random_unitary",
    "tensor",
]
