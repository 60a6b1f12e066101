import numpy as np
import pytest
from pydantic import ValidationError

from src.infogeo import (
    FidelityBound,
    FidelityKind,
    classical_fidelity_equimodular,
    classical_fidelity_equimodular_params,
    classical_fidelity_general,
    classical_fidelity_general_params,
    fidelity_bound,
    mc_classical_fidelity_equimodular,
)


def test_closed_forms_at_d4():
    assert classical_fidelity_general(4) == pytest.approx(0.4)
    assert classical_fidelity_equimodular(4) == pytest.approx(0.4375)


def test_qubit_and_trivial_dimensions():
    assert classical_fidelity_general(2) == pytest.approx(2 / 3)
    assert classical_fidelity_equimodular(2) == pytest.approx(0.75)
    assert classical_fidelity_general(1) == pytest.approx(1.0)
    assert classical_fidelity_equimodular(1) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        classical_fidelity_general(0)


@pytest.mark.parametrize("d", [2, 3, 4, 8, 100])
def test_parameter_count_forms_agree(d):
    assert classical_fidelity_general_params(2 * d - 2) == pytest.approx(classical_fidelity_general(d))
    assert classical_fidelity_equimodular_params(d - 1) == pytest.approx(classical_fidelity_equimodular(d))


def test_equimodular_limit_exceeds_general_for_equal_dimension():
    for d in range(2, 50):
        assert classical_fidelity_equimodular(d) > classical_fidelity_general(d)


def test_fidelity_bound_records():
    bound = fidelity_bound("equimodular", 4)
    assert bound.n_params == 3
    assert bound.value == pytest.approx(0.4375)
    assert fidelity_bound(FidelityKind.GENERAL, 4).n_params == 6
    with pytest.raises(ValidationError):
        FidelityBound(d=4, n_params=3, value=0.4, kind="general")


@pytest.mark.parametrize("estimator", ["strategy", "integrand"])
def test_monte_carlo_agrees_with_closed_form(estimator):
    mc = mc_classical_fidelity_equimodular(4, 200_000, np.random.default_rng(11), estimator=estimator)
    assert mc.standard_error > 0
    assert abs(mc.estimate - 0.4375) < 4 * mc.standard_error


@pytest.mark.slow
def test_monte_carlo_million_samples():
    mc = mc_classical_fidelity_equimodular(4, 1_000_000, np.random.default_rng(2015))
    assert mc.estimate == pytest.approx(0.4375, abs=0.002)


def test_chunking_does_not_change_the_estimate():
    whole = mc_classical_fidelity_equimodular(3, 5000, np.random.default_rng(5), chunk_size=5000)
    pieces = mc_classical_fidelity_equimodular(3, 5000, np.random.default_rng(5), chunk_size=5000 // 4)
    assert pieces.estimate == pytest.approx(whole.estimate, rel=1e-12)


def test_monte_carlo_edge_cases(rng):
    assert mc_classical_fidelity_equimodular(1, 10, rng).estimate == 1.0
    with pytest.raises(ValueError):
        mc_classical_fidelity_equimodular(3, 0, rng)
    with pytest.raises(ValueError):
        mc_classical_fidelity_equimodular(3, 10, rng, estimator="guess")
