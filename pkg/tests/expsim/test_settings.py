import numpy as np
import pytest

from src.expsim import (
    FRINGE_SETTINGS,
    MeasurementSetting,
    Polarization,
    SpatialMode,
    setting_index,
    setting_probabilities,
    setting_projector,
    setting_vector,
    tomography_settings,
)
from src.qcore import density_from_state, ket, maximally_mixed


def test_schedule_has_36_polarization_major_settings():
    settings = tomography_settings()
    assert len(settings) == 36
    assert len({s.label for s in settings}) == 36
    assert settings[0].label == "Hh"
    assert settings[7].label == "Vv"
    assert settings[-1].label == "Ll"
    assert [setting_index(s) for s in settings] == list(range(36))


def test_setting_vector_is_normalized_product():
    s = MeasurementSetting(polarization=Polarization.D, spatial=SpatialMode.r)
    assert np.allclose(setting_vector(s), np.array([1, 0, 1, 0]) / np.sqrt(2.0))
    for s in tomography_settings():
        assert np.linalg.norm(setting_vector(s)) == pytest.approx(1.0)


def test_projectors_are_informationally_complete():
    stacked = np.stack([setting_projector(s).reshape(-1) for s in tomography_settings()])
    real_span = np.concatenate([stacked.real, stacked.imag], axis=1)
    assert np.linalg.matrix_rank(real_span) == 16


def test_probabilities_of_a_complete_product_basis_sum_to_one():
    rho = density_from_state(ket(4, 1))
    probs = dict(zip([s.label for s in tomography_settings()], setting_probabilities(rho)))
    assert probs["Hl"] == pytest.approx(1.0)
    assert probs["Hr"] + probs["Hl"] + probs["Vr"] + probs["Vl"] == pytest.approx(1.0)
    assert probs["Dd"] == pytest.approx(0.25)


def test_maximally_mixed_gives_quarter_everywhere():
    assert setting_probabilities(maximally_mixed(4)) == pytest.approx([0.25] * 36)


def test_fringe_settings():
    assert [s.label for s in FRINGE_SETTINGS] == ["Hh", "Dr", "Dl"]
