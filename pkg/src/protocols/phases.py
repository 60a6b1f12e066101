from __future__ import annotations

import math

from .types import EquimodularPhases, ExperimentalPhases

HALF_PI = 0.5 * math.pi


def phase_map(e: ExperimentalPhases) -> EquimodularPhases:
    """Experimental (φ_a, φ_b, φ_c) to ququart phases (φ_1, φ_2, φ_3), modulo 2π."""
    return EquimodularPhases(
        d=4,
        phases=(e.phi_a + e.phi_b, e.phi_b + HALF_PI, e.phi_c - HALF_PI),
    )


def inverse_phase_map(p: EquimodularPhases) -> ExperimentalPhases:
    if p.d != 4:
        raise ValueError(f"experimental phases describe d=4 states, got d={p.d}")
    phi1, phi2, phi3 = p.phases
    return ExperimentalPhases(
        phi_a=phi1 - phi2 + HALF_PI,
        phi_b=phi2 - HALF_PI,
        phi_c=phi3 + HALF_PI,
    )
