import pandas as pd
import pytest

from src.expsim import (
    CountRecord,
    NoiseModel,
    count_records_frame,
    read_count_records,
    records_from_frame,
    simulate_counts,
    write_count_records,
)
from src.protocols import EquimodularPhases


def test_count_file_layout(analytic_records, tmp_path):
    path = write_count_records(analytic_records, tmp_path / "counts.csv")
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "outcome,pol,spatial,counts,shots"
    assert lines[1].startswith("0,H,h,")
    assert len(lines) == 1 + 144
    assert not (tmp_path / "counts.csv.partial").exists()


def test_sampled_counts_survive_a_file(row_a_phases, rng, tmp_path):
    records = simulate_counts(row_a_phases, NoiseModel(spatial_crosstalk_bob=0.05), 500, rng)
    path = write_count_records(records, tmp_path / "sampled.csv")
    assert read_count_records(path) == records


def test_read_count_records_parses_labels(tmp_path):
    path = tmp_path / "counts.csv"
    path.write_text("outcome,pol,spatial,counts,shots\n1,L,l,3,10\n2,A,a,0,10\n", encoding="utf-8")
    records = read_count_records(path)
    assert [r.setting.label for r in records] == ["Ll", "Aa"]
    assert records[0].alice_outcome == 1


def test_missing_columns_rejected():
    with pytest.raises(ValueError, match="shots"):
        records_from_frame(pd.DataFrame({"outcome": [0], "pol": ["H"], "spatial": ["h"], "counts": [1]}))


def test_counts_cannot_exceed_shots():
    frame = pd.DataFrame({"outcome": [0], "pol": ["H"], "spatial": ["h"], "counts": [11], "shots": [10]})
    with pytest.raises(ValueError):
        records_from_frame(frame)


def test_frame_columns(analytic_records):
    frame = count_records_frame(analytic_records[:3])
    assert list(frame.columns) == ["outcome", "pol", "spatial", "counts", "shots"]
    assert isinstance(analytic_records[0], CountRecord)


def test_uniform_target_counts_match_golden(noiseless, tmp_path, assert_matches_golden):
    uniform = EquimodularPhases.from_degrees((0.0, 0.0, 0.0))
    path = write_count_records(simulate_counts(uniform, noiseless, 400, analytic=True), tmp_path / "counts.csv")
    assert_matches_golden(path.read_text(encoding="utf-8"), "counts_uniform_analytic.csv")
