from __future__ import annotations

import logging

import numpy as np

from src.protocols import EquimodularPhases
from src.qcore import DensityMatrix

from .types import PhaseEstimate, UndefinedPhaseError

logger = logging.getLogger(__name__)

COHERENCE_FLOOR = 1e-6


def extract_phases(rho: DensityMatrix, *, threshold: float = COHERENCE_FLOOR) -> PhaseEstimate:
    """φ_j = arg ρ_{j0}, wrapped into [0, 2π)."""
    coherences = rho.entries[1:, 0]
    for level, c in enumerate(coherences, start=1):
        if abs(c) <= threshold:
            raise UndefinedPhaseError(level, float(abs(c)))
    return PhaseEstimate(phases=EquimodularPhases(d=rho.dim, phases=tuple(np.angle(coherences))))


def circular_spread(samples: np.ndarray) -> np.ndarray:
    """Circular standard deviation per column of an (n, k) array of angles."""
    resultant = np.abs(np.mean(np.exp(1j * samples), axis=0))
    return np.sqrt(-2.0 * np.log(np.clip(resultant, 1e-300, 1.0)))
