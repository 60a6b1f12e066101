import logging

import numpy as np
import pytest

from src.expsim import (
    CountRecord,
    MeasurementSetting,
    NoiseModel,
    heralded_states,
    simulate_counts,
    tomography_settings,
)
from src.qcore import density_from_state, fidelity, ket, random_state
from src.tomography import (
    EmptyCountsError,
    InsufficientSettingsError,
    Likelihood,
    build_objective,
    mle_reconstruct,
    rho_from_params,
)
from src.tomography.mle import initial_params, params_to_t, t_to_params


def test_parameter_round_trip(rng):
    params = rng.normal(size=16)
    assert np.allclose(t_to_params(params_to_t(params, 4)), params)
    t = params_to_t(params, 4)
    assert np.allclose(np.triu(t, k=1), 0.0)


def test_every_parameter_vector_is_a_density_matrix(rng):
    for _ in range(10):
        rho = rho_from_params(rng.normal(size=16), 4)
        assert np.allclose(rho, rho.conj().T)
        assert np.trace(rho).real == pytest.approx(1.0)
        assert np.linalg.eigvalsh(rho).min() > -1e-12


def test_initial_guess_is_maximally_mixed():
    assert np.allclose(rho_from_params(initial_params(4), 4), np.eye(4) / 4)


@pytest.mark.parametrize("likelihood", list(Likelihood))
def test_gradient_matches_finite_differences(outcome_zero, rng, likelihood):
    objective = build_objective(outcome_zero, likelihood)
    params = rng.normal(size=16)
    _, grad = objective.value_and_grad(params)
    h = 1e-6
    numeric = np.array(
        [
            (objective.value(params + h * e) - objective.value(params - h * e)) / (2 * h)
            for e in np.eye(16)
        ]
    )
    assert grad == pytest.approx(numeric, rel=1e-4, abs=1e-3)


def test_value_and_grad_agrees_with_value(outcome_zero, rng):
    objective = build_objective(outcome_zero)
    params = rng.normal(size=16)
    assert objective.value_and_grad(params)[0] == pytest.approx(objective.value(params))


def test_reconstructs_a_computational_state(exact_records):
    result = mle_reconstruct(exact_records(ket(4, 0)))
    assert fidelity(result.rho, ket(4, 0)) > 0.999


def test_reconstructs_the_heralded_branch(row_a_phases, a_plus_branch):
    records = [r for r in simulate_counts(row_a_phases, NoiseModel(), 10_000, analytic=True) if r.alice_outcome == 0]
    result = mle_reconstruct(records)
    assert fidelity(result.rho, a_plus_branch) > 0.999


@pytest.mark.parametrize("likelihood", ["gaussian", "poisson"])
def test_full_rank_state_is_recovered(row_a_phases, outcome_zero, likelihood):
    truth = heralded_states(row_a_phases, NoiseModel(depolarizing=0.2))[0][1]
    result = mle_reconstruct(outcome_zero, likelihood=likelihood)
    assert np.allclose(result.rho.entries, truth.entries, atol=1e-3)
    assert result.neg_log_likelihood == pytest.approx(0.0, abs=1e-3)


def test_history_does_not_increase(rng, exact_records):
    result = mle_reconstruct(exact_records(random_state(4, rng), shots=5000.0))
    history = np.array(result.history)
    assert len(history) >= 2
    assert np.all(np.diff(history) <= 1e-9 * (1.0 + np.abs(history[:-1])))


def test_iteration_cap_is_reported(outcome_zero, caplog):
    with caplog.at_level(logging.WARNING, logger="src.tomography.mle"):
        result = mle_reconstruct(outcome_zero, max_iterations=2)
    assert not result.converged
    assert result.iterations <= 2
    assert "iteration cap" in caplog.text


def test_too_few_settings(exact_records):
    with pytest.raises(InsufficientSettingsError):
        mle_reconstruct(exact_records(ket(4, 0))[:10])
    with pytest.raises(InsufficientSettingsError):
        mle_reconstruct([])


def test_all_zero_counts():
    records = [CountRecord(alice_outcome=0, setting=s, counts=0.0, shots=100.0) for s in tomography_settings()]
    with pytest.raises(EmptyCountsError):
        mle_reconstruct(records)


def test_records_of_several_outcomes_rejected(exact_records):
    records = exact_records(ket(4, 0)) + exact_records(ket(4, 1), outcome=1)
    with pytest.raises(ValueError, match="one outcome"):
        build_objective(records)


def test_zero_shot_records_are_dropped(exact_records):
    extra = CountRecord(
        alice_outcome=0, setting=MeasurementSetting(polarization="H", spatial="h"), counts=0.0, shots=0.0
    )
    objective = build_objective(exact_records(density_from_state(ket(4, 2))) + [extra])
    assert objective.projectors.shape == (36, 4, 4)
