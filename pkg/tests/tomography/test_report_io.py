from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from src.protocols import TARGET_PHASES_DEG, EquimodularPhases
from src.qcore import maximally_mixed
from src.tomography import (
    REPORT_COLUMNS,
    PhaseEstimate,
    ReportRow,
    density_matrix_from_json,
    density_matrix_json,
    density_matrix_payload,
    report_frame,
    report_row,
)

GOLDEN = Path(__file__).resolve().parents[1] / "fixtures" / "golden"


def _estimate(degrees) -> PhaseEstimate:
    return PhaseEstimate(phases=EquimodularPhases.from_degrees(degrees))


def test_report_row_text_matches_golden():
    row = report_row(TARGET_PHASES_DEG["a"], _estimate(TARGET_PHASES_DEG["a"]), 1.0, label="a")
    assert row.text + "\n" == (GOLDEN / "report_row_a.txt").read_text(encoding="utf-8")


def test_measured_phase_rounding_wraps_to_zero():
    row = report_row((0.0, 10.0, 20.0), _estimate((359.96, 10.04, 19.94)), 0.8712)
    assert row.measured_deg == (0.0, 10.0, 19.9)
    assert row.fidelity_pct == 87.1
    assert row.text == "0, 10, 20 | 0.0, 10.0, 19.9 | 87.1"


def test_report_frame_columns():
    rows = [report_row(TARGET_PHASES_DEG[k], _estimate(TARGET_PHASES_DEG[k]), 0.9, label=k) for k in "abc"]
    frame = report_frame(rows)
    assert list(frame.columns) == REPORT_COLUMNS
    assert list(frame["label"]) == ["a", "b", "c"]
    assert frame.loc[1, "target_phi3_deg"] == 324.0


def test_fidelity_percentage_range():
    with pytest.raises(ValidationError):
        ReportRow(target_deg=(0.0,), measured_deg=(0.0,), fidelity_pct=101.0)


def test_density_matrix_json():
    rho = maximally_mixed(4)
    payload = density_matrix_payload(rho, weighting="outcome_probability")
    assert payload["dim"] == 4
    assert payload["entries"][0][0] == [0.25, 0.0]
    assert payload["weighting"] == "outcome_probability"
    assert density_matrix_from_json(density_matrix_json(rho)) == rho


def test_density_matrix_json_shape_check():
    with pytest.raises(ValueError):
        density_matrix_from_json('{"dim": 2, "entries": [[[1, 0]]]}')
    assert np.isclose(density_matrix_from_json('{"dim": 1, "entries": [[[1, 0]]]}').entries[0, 0], 1.0)
