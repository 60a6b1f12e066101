import numpy as np
import pytest

from src.expsim import CountRecord, NoiseModel, setting_probability, simulate_counts, tomography_settings
from src.qcore import DensityMatrix, PureState, as_density


def _exact_records(state: PureState | DensityMatrix, shots: float = 1000.0, outcome: int = 0) -> list[CountRecord]:
    rho = as_density(state)
    return [
        CountRecord(alice_outcome=outcome, setting=s, counts=shots * setting_probability(rho, s), shots=shots)
        for s in tomography_settings()
    ]


@pytest.fixture()
def exact_records():
    """Noise-free expected counts for a known state on all 36 settings."""
    return _exact_records


@pytest.fixture()
def noisy_analytic_records(row_a_phases):
    return simulate_counts(row_a_phases, NoiseModel(depolarizing=0.2), 10_000, analytic=True)


@pytest.fixture()
def outcome_zero(noisy_analytic_records):
    return [r for r in noisy_analytic_records if r.alice_outcome == 0]


@pytest.fixture()
def a_plus_branch(row_a_phases) -> PureState:
    amplitudes = np.exp(1j * row_a_phases.full) / 2.0
    return PureState(amplitudes=amplitudes * np.array([1, 1, 1, -1]))
