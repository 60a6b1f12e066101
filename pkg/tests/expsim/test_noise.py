import numpy as np
import pytest
from pydantic import ValidationError

from src.expsim import NoiseModel, apply_noise, corrected_bob_state
from src.expsim.noise import SPATIAL_FLIP, apply_kraus, bit_flip_kraus, depolarize
from src.protocols import encode_on_entangled, equimodular_state
from src.qcore import (
    DensityMatrix,
    DimensionMismatchError,
    density_from_state,
    fidelity,
    ket,
    maximally_mixed,
    partial_trace_first,
)


def test_noise_model_ranges():
    with pytest.raises(ValidationError):
        NoiseModel(spatial_crosstalk_bob=1.5)
    with pytest.raises(ValidationError):
        NoiseModel(depolarizing=-0.1)
    assert NoiseModel().is_noiseless
    assert not NoiseModel(depolarizing=0.1).is_noiseless


def test_noiseless_model_is_identity(row_a_phases, noiseless):
    joint = encode_on_entangled(row_a_phases)
    assert apply_noise(joint, noiseless) == density_from_state(joint)


def test_bob_crosstalk_mixes_spatial_modes():
    rho = apply_noise(ket(4, 0), NoiseModel(spatial_crosstalk_bob=0.3))
    assert np.diag(rho.entries).real == pytest.approx([0.7, 0.3, 0.0, 0.0])


def test_full_crosstalk_is_a_unitary_flip():
    rho = apply_noise(ket(4, 2), NoiseModel(spatial_crosstalk_bob=1.0))
    assert rho == density_from_state(ket(4, 3))
    assert np.allclose(SPATIAL_FLIP @ SPATIAL_FLIP, np.eye(4))


def test_single_photon_ignores_alice_crosstalk():
    rho = apply_noise(ket(4, 0), NoiseModel(spatial_crosstalk_alice=0.5))
    assert rho == density_from_state(ket(4, 0))


def test_alice_crosstalk_leaves_bob_marginal_unchanged(row_a_phases):
    joint = encode_on_entangled(row_a_phases)
    noisy = apply_noise(joint, NoiseModel(spatial_crosstalk_alice=0.2))
    assert partial_trace_first(noisy, 4, 4) == partial_trace_first(joint, 4, 4)
    assert noisy != density_from_state(joint)


def test_full_depolarizing_gives_maximally_mixed(row_a_phases):
    noisy = apply_noise(encode_on_entangled(row_a_phases), NoiseModel(depolarizing=1.0))
    assert noisy == maximally_mixed(16)


def test_noise_keeps_trace(row_a_phases):
    model = NoiseModel(spatial_crosstalk_alice=0.1, spatial_crosstalk_bob=0.05, depolarizing=0.2)
    noisy = apply_noise(encode_on_entangled(row_a_phases), model)
    assert np.trace(noisy.entries).real == pytest.approx(1.0)


def test_unsupported_dimension():
    with pytest.raises(DimensionMismatchError):
        apply_noise(ket(8, 0), NoiseModel(depolarizing=0.1))


def _random_density(dim: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


@pytest.mark.slow
def test_channels_preserve_trace_on_random_states():
    rng = np.random.default_rng(5)
    alice_flip = np.kron(SPATIAL_FLIP, np.eye(4))
    bob_flip = np.kron(np.eye(4), SPATIAL_FLIP)
    for _ in range(100):
        rho = _random_density(16, rng)
        eps_a, eps_b, lam = rng.uniform(0.0, 1.0, size=3)
        raw = apply_kraus(apply_kraus(rho, bit_flip_kraus(eps_a, alice_flip)), bit_flip_kraus(eps_b, bob_flip))
        raw = depolarize(raw, lam)
        assert np.trace(raw).real == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.eigvalsh(0.5 * (raw + raw.conj().T)).min() > -1e-12
        model = NoiseModel(spatial_crosstalk_alice=eps_a, spatial_crosstalk_bob=eps_b, depolarizing=lam)
        assert np.allclose(apply_noise(DensityMatrix(entries=rho), model).entries, raw, atol=1e-12)


def test_kraus_sets_are_complete():
    for eps in (0.0, 0.3, 1.0):
        kraus = bit_flip_kraus(eps, SPATIAL_FLIP)
        assert np.allclose(sum(k.conj().T @ k for k in kraus), np.eye(4))


@pytest.mark.slow
def test_fidelity_falls_monotonically_with_depolarizing(row_a_phases):
    target = equimodular_state(row_a_phases)
    grid = np.round(np.arange(0.0, 1.01, 0.1), 10)
    values = [fidelity(corrected_bob_state(row_a_phases, NoiseModel(depolarizing=lam)), target) for lam in grid]
    assert values[0] == pytest.approx(1.0)
    assert values[-1] == pytest.approx(0.25)
    assert all(later <= earlier + 1e-12 for earlier, later in zip(values, values[1:]))
    assert values == pytest.approx([1.0 - 0.75 * lam for lam in grid], abs=1e-10)
