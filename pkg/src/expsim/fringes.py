from __future__ import annotations

import logging
import math
from typing import Sequence

from src.protocols import ExperimentalPhases, phase_map
from src.protocols.bases import BasisName

from .sampling import corrected_bob_state
from .settings import FRINGE_SETTINGS, setting_probability
from .types import ExperimentalPhase, FringeScan, NoiseModel

logger = logging.getLogger(__name__)


def fringe_scan(
    varied: ExperimentalPhase | str,
    fixed: ExperimentalPhases,
    angles_deg: Sequence[float],
    noise: NoiseModel,
    basis: BasisName | None = None,
) -> FringeScan:
    """⟨Hh⟩, ⟨Dr⟩ and ⟨Dl⟩ on Bob's corrected state while one experimental phase sweeps.

    The varied phase's entry in ``fixed`` is ignored.
    """
    varied = ExperimentalPhase(varied)
    if not angles_deg:
        raise ValueError("angle grid must not be empty")
    curves: list[list[float]] = [[], [], []]
    for angle in angles_deg:
        settings = fixed.with_phase(varied.value, math.radians(angle))
        rho = corrected_bob_state(phase_map(settings), noise, basis)
        for curve, setting in zip(curves, FRINGE_SETTINGS):
            curve.append(setting_probability(rho, setting))
    logger.info(f"Fringe scan over {varied.value}: {len(angles_deg)} points")
    return FringeScan(
        varied=varied,
        fixed=fixed,
        angles_deg=tuple(float(a) for a in angles_deg),
        p_hh=tuple(curves[0]),
        p_dr=tuple(curves[1]),
        p_dl=tuple(curves[2]),
    )


def angle_grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive grid start, start+step, ... not exceeding ``stop``."""
    if step <= 0:
        raise ValueError("angle step must be positive")
    if stop < start:
        raise ValueError("angle stop must not precede start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(count)]
