"""Maximum-likelihood tomography, numerical correction and phase extraction."""

from .correction import correct_and_average, group_by_outcome, outcome_weights
from .io import density_matrix_from_json, density_matrix_json, density_matrix_payload
from .mle import build_objective, mle_reconstruct, rho_from_params
from .phases import extract_phases
from .pipeline import bootstrap_phase_uncertainty, reconstruct_pipeline, resample_counts
from .report import REPORT_COLUMNS, ReportRow, report_frame, report_row
from .types import (
    EmptyCountsError,
    InsufficientSettingsError,
    Likelihood,
    PhaseEstimate,
    PipelineResult,
    ReconstructionResult,
    UndefinedPhaseError,
)

__all__ = [
    "EmptyCountsError",
    "InsufficientSettingsError",
    "Likelihood",
    "PhaseEstimate",
    "PipelineResult",
    "REPORT_COLUMNS",
    "ReconstructionResult",
    "ReportRow",
    "UndefinedPhaseError",
    "bootstrap_phase_uncertainty",
    "build_objective",
    "correct_and_average",
    "density_matrix_from_json",
    "density_matrix_json",
    "density_matrix_payload",
    "extract_phases",
    "group_by_outcome",
    "mle_reconstruct",
    "outcome_weights",
    "reconstruct_pipeline",
    "report_frame",
    "report_row",
    "resample_counts",
]
