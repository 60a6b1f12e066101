"""Noisy-experiment simulation: crosstalk channel, coincidence counts, fringe scans."""

from .fringes import angle_grid, fringe_scan
from .io import (
    count_records_frame,
    fringe_scan_frame,
    read_count_records,
    records_from_frame,
    write_count_records,
)
from .noise import apply_noise
from .sampling import corrected_bob_state, heralded_states, simulate_counts
from .settings import (
    FRINGE_SETTINGS,
    setting_index,
    setting_probabilities,
    setting_probability,
    setting_projector,
    setting_vector,
    tomography_settings,
)
from .types import (
    CountRecord,
    ExperimentalPhase,
    FringeScan,
    MeasurementSetting,
    NoiseModel,
    Polarization,
    SpatialMode,
)

__all__ = [
    "CountRecord",
    "ExperimentalPhase",
    "FRINGE_SETTINGS",
    "FringeScan",
    "MeasurementSetting",
    "NoiseModel",
    "Polarization",
    "SpatialMode",
    "angle_grid",
    "apply_noise",
    "corrected_bob_state",
    "count_records_frame",
    "fringe_scan",
    "fringe_scan_frame",
    "heralded_states",
    "read_count_records",
    "records_from_frame",
    "setting_index",
    "setting_probabilities",
    "setting_probability",
    "setting_projector",
    "setting_vector",
    "simulate_counts",
    "tomography_settings",
    "write_count_records",
]
