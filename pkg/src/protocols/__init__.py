"""Protocol simulations: SDT, qubit teleportation, remote state preparation, resources."""

from .bases import alice_basis, bell_basis, fourier_mub, spin_orbit_basis
from .phases import inverse_phase_map, phase_map
from .records import transcript_record, transcripts_jsonl
from .resources import classical_bit_ratio, resource_profile, resource_table
from .rsp import run_rsp_qubit_probabilistic, rsp_success_rate
from .sdt import (
    correction_table,
    run_sdt,
    sample_outcome_frequencies,
    sdt_correction,
    sdt_outcome_probabilities,
)
from .states import TARGET_PHASES_DEG, encode_on_entangled, equimodular_state, maximally_entangled
from .teleport import run_qt_qubit
from .types import (
    CharlesKnowledge,
    EquimodularPhases,
    ExperimentalPhases,
    Protocol,
    ProtocolTranscript,
    ResourceProfile,
)

__all__ = [
    "CharlesKnowledge",
    "EquimodularPhases",
    "ExperimentalPhases",
    "Protocol",
    "ProtocolTranscript",
    "ResourceProfile",
    "TARGET_PHASES_DEG",
    "alice_basis",
    "bell_basis",
    "classical_bit_ratio",
    "correction_table",
    "encode_on_entangled",
    "equimodular_state",
    "fourier_mub",
    "inverse_phase_map",
    "maximally_entangled",
    "phase_map",
    "resource_profile",
    "resource_table",
    "rsp_success_rate",
    "run_qt_qubit",
    "run_rsp_qubit_probabilistic",
    "run_sdt",
    "sample_outcome_frequencies",
    "sdt_correction",
    "sdt_outcome_probabilities",
    "spin_orbit_basis",
    "transcript_record",
    "transcripts_jsonl",
]
