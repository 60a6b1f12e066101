"""Crosstalk and depolarizing channels on the two-photon ququart space."""

from __future__ import annotations

import logging
from typing import Sequence

import numpy as np

from src.qcore import DensityMatrix, PureState, as_density
from src.qcore.errors import DimensionMismatchError

from .types import NoiseModel

logger = logging.getLogger(__name__)

PHOTON_DIM = 4
JOINT_DIM = PHOTON_DIM * PHOTON_DIM

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)

# r <-> l flip on a ququart indexed 2·pol + spatial.
SPATIAL_FLIP = np.kron(_I2, _X)


def bit_flip_kraus(epsilon: float, flip: np.ndarray) -> list[np.ndarray]:
    identity = np.eye(flip.shape[0], dtype=complex)
    return [np.sqrt(1.0 - epsilon) * identity, np.sqrt(epsilon) * flip]


def apply_kraus(rho: np.ndarray, kraus: Sequence[np.ndarray]) -> np.ndarray:
    return sum(k @ rho @ k.conj().T for k in kraus)


def depolarize(rho: np.ndarray, strength: float) -> np.ndarray:
    dim = rho.shape[0]
    return (1.0 - strength) * rho + strength * np.eye(dim, dtype=complex) / dim


def apply_noise(state: PureState | DensityMatrix, model: NoiseModel) -> DensityMatrix:
    """Apply the crosstalk and depolarizing channels.

    A dim-16 input is the joint (Alice ⊗ Bob) state and receives crosstalk on both
    photons; a dim-4 input is Bob's photon alone and ignores Alice's crosstalk.
    """
    rho = as_density(state)
    if model.is_noiseless:
        return rho

    if rho.dim == JOINT_DIM:
        alice_flip = np.kron(SPATIAL_FLIP, np.eye(PHOTON_DIM))
        bob_flip = np.kron(np.eye(PHOTON_DIM), SPATIAL_FLIP)
        channels = [(model.spatial_crosstalk_alice, alice_flip), (model.spatial_crosstalk_bob, bob_flip)]
    elif rho.dim == PHOTON_DIM:
        channels = [(model.spatial_crosstalk_bob, SPATIAL_FLIP)]
    else:
        raise DimensionMismatchError(JOINT_DIM, rho.dim, "noisy state dimension (expected 16 or 4)")

    out = rho.entries
    for epsilon, flip in channels:
        if epsilon > 0.0:
            out = apply_kraus(out, bit_flip_kraus(epsilon, flip))
    if model.depolarizing > 0.0:
        out = depolarize(out, model.depolarizing)
    logger.debug(
        f"Applied noise eps_A={model.spatial_crosstalk_alice} eps_B={model.spatial_crosstalk_bob} "
        f"lambda={model.depolarizing} on dim {rho.dim}"
    )
    return DensityMatrix.from_operator(out)
