from __future__ import annotations

import numpy as np

from src.qcore import PureState

from .types import EquimodularPhases

# Reference target phase triples φ1, φ2, φ3 in degrees, labelled a-i.
TARGET_PHASES_DEG: dict[str, tuple[float, float, float]] = {
    "a": (112.0, 180.0, 278.0),
    "b": (270.0, 90.0, 324.0),
    "c": (112.0, 277.0, 119.0),
    "d": (180.0, 180.0, 137.0),
    "e": (26.0, 202.0, 145.0),
    "f": (270.0, 90.0, 184.0),
    "g": (211.0, 158.0, 185.0),
    "h": (268.0, 148.0, 209.0),
    "i": (180.0, 277.0, 223.0),
}


def equimodular_state(p: EquimodularPhases) -> PureState:
    """Σ_j e^{iφ_j}|j⟩/√d."""
    return PureState(amplitudes=np.exp(1j * p.full) / np.sqrt(p.d))


def encode_on_entangled(p: EquimodularPhases) -> PureState:
    """Σ_j e^{iφ_j}|jj⟩/√d on Alice ⊗ Bob (Alice's factor first)."""
    if p.d < 2:
        raise ValueError("entangled encoding needs d >= 2")
    joint = np.zeros((p.d, p.d), dtype=complex)
    joint[np.diag_indices(p.d)] = np.exp(1j * p.full) / np.sqrt(p.d)
    return PureState(amplitudes=joint.reshape(-1))


def maximally_entangled(d: int) -> PureState:
    return encode_on_entangled(EquimodularPhases(d=d, phases=(0.0,) * (d - 1)))
