import math

import numpy as np
import pytest

from src.protocols import EquimodularPhases, ExperimentalPhases, inverse_phase_map, phase_map


def test_phase_map_values():
    p = phase_map(ExperimentalPhases.from_degrees(30.0, 60.0, 0.0))
    assert p.degrees == pytest.approx((90.0, 150.0, 270.0))


def test_inverse_round_trip(rng):
    for _ in range(20):
        p = EquimodularPhases(d=4, phases=tuple(rng.uniform(0, 2 * math.pi, size=3)))
        back = phase_map(inverse_phase_map(p))
        assert np.allclose(np.exp(1j * np.array(back.phases)), np.exp(1j * np.array(p.phases)))


def test_inverse_needs_ququart():
    with pytest.raises(ValueError):
        inverse_phase_map(EquimodularPhases(d=3, phases=(0.0, 0.0)))
