"""Monte Carlo estimate of the outcome-probability region reachable by equimodular inputs.

Measuring an equimodular qudit in the Fourier basis gives probabilities p_k; the
point (√p_0, …, √p_{d-1}) lies on the positive orthant of the unit sphere. For
d=3 the orthant is cut into equal-area cells (uniform in z = √p_2 and in the
azimuth of (√p_0, √p_1)) and the occupied share is reported.
"""

from __future__ import annotations

import logging

import numpy as np

from .fidelity import DEFAULT_CHUNK
from .types import RegionEstimate

logger = logging.getLogger(__name__)

MIN_SAMPLES = 10_000
HALF_PI = 0.5 * np.pi


def outcome_probabilities(phases: np.ndarray) -> np.ndarray:
    """Fourier-basis outcome probabilities for rows of phases φ_1..φ_{d-1} (φ_0 = 0)."""
    d = phases.shape[1] + 1
    psi = np.exp(1j * np.concatenate([np.zeros((phases.shape[0], 1)), phases], axis=1)) / np.sqrt(d)
    return np.abs(np.fft.fft(psi, axis=1)) ** 2 / d


def _cell_indices(p: np.ndarray, resolution: int) -> tuple[np.ndarray, ...]:
    amplitudes = np.sqrt(np.clip(p, 0.0, 1.0))
    if p.shape[1] == 2:
        angle = np.arctan2(amplitudes[:, 1], amplitudes[:, 0])
        return (np.minimum((angle / HALF_PI * resolution).astype(int), resolution - 1),)
    z = amplitudes[:, 2]
    azimuth = np.arctan2(amplitudes[:, 1], amplitudes[:, 0])
    zi = np.minimum((z * resolution).astype(int), resolution - 1)
    ai = np.minimum((azimuth / HALF_PI * resolution).astype(int), resolution - 1)
    return zi, ai


def _boundary_cells(occupied: np.ndarray) -> int:
    """Occupied cells with at least one empty grid neighbour."""
    padded = np.pad(occupied, 1, mode="edge")
    inner = tuple(slice(1, -1) for _ in range(occupied.ndim))
    empty_neighbour = np.zeros_like(occupied)
    for axis in range(occupied.ndim):
        for shift in (-1, 1):
            empty_neighbour |= ~np.roll(padded, shift, axis=axis)[inner]
    return int(np.count_nonzero(occupied & empty_neighbour))


def outcome_region_fraction(
    d: int,
    samples: int,
    resolution: int,
    rng: np.random.Generator,
    *,
    chunk_size: int = DEFAULT_CHUNK,
) -> RegionEstimate:
    """Occupied share of the orthant for d ∈ {2, 3}.

    The standard error is a discretization uncertainty: half the share of
    occupied cells that touch an empty one.
    """
    if d not in (2, 3):
        raise ValueError(f"region estimate is implemented for d=2 and d=3, got {d}")
    if samples < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples, got {samples}")
    if resolution < 2:
        raise ValueError(f"grid resolution must be >= 2, got {resolution}")

    shape = (resolution,) * (d - 1)
    occupied = np.zeros(shape, dtype=bool)
    remaining = samples
    while remaining > 0:
        m = min(chunk_size, remaining)
        p = outcome_probabilities(rng.uniform(0.0, 2.0 * np.pi, size=(m, d - 1)))
        occupied[_cell_indices(p, resolution)] = True
        remaining -= m

    cells = occupied.size
    count = int(np.count_nonzero(occupied))
    boundary = _boundary_cells(occupied)
    fraction = count / cells
    logger.info(f"Outcome region d={d}: {count}/{cells} cells occupied, {boundary} on the boundary")
    return RegionEstimate(
        d=d,
        fraction=fraction,
        standard_error=boundary / (2.0 * cells),
        samples=samples,
        resolution=resolution,
        occupied_cells=count,
        boundary_cells=boundary,
    )


def qutrit_outcome_region_fraction(samples: int, resolution: int, rng: np.random.Generator) -> RegionEstimate:
    return outcome_region_fraction(3, samples, resolution, rng)
