import argparse
import json

import pytest
from pydantic import ValidationError

from src.cli.commands import resolve_target, spawn_generators
from src.cli.input import build_parser, load_run_config, parse_angles, parse_float_list, parse_int_list
from src.cli.types import PhaseConvention, RunConfig, TargetSpec


def test_list_parsers():
    assert parse_int_list("2, 3,4,") == [2, 3, 4]
    assert parse_float_list("") == []
    assert parse_float_list("1.5,2") == [1.5, 2.0]


def test_parse_angles():
    assert parse_angles("0:360:5") == {"start": 0.0, "stop": 360.0, "step": 5.0}
    with pytest.raises(argparse.ArgumentTypeError):
        parse_angles("0:360")
    with pytest.raises(argparse.ArgumentTypeError):
        parse_angles("a:b:c")


def test_parser_rejects_bad_degree_triple(capsys):
    with pytest.raises(SystemExit):
        build_parser().parse_args(["tomo", "--counts", "c.csv", "--target-deg", "1,2"])


def test_defaults_without_flags():
    config = load_run_config(build_parser().parse_args(["fringes"]))
    assert config.vary.value == "phi_a"
    assert config.angles.step == 5.0
    assert config.noise.is_noiseless
    assert config.format == "csv"


def test_config_file_values(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"command": "bounds", "dims": [3], "samples": 10, "seed": 4}), encoding="utf-8")
    config = load_run_config(build_parser().parse_args(["resources", "--config", str(path)]))
    assert config.command == "resources"
    assert config.dims == [3]


def test_config_file_must_be_an_object(tmp_path):
    path = tmp_path / "c.json"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ValueError):
        load_run_config(build_parser().parse_args(["resources", "--config", str(path)]))


def test_unknown_config_keys_rejected():
    with pytest.raises(ValidationError):
        RunConfig(command="resources", shots_per_target=5)


def test_stochastic_commands_need_seed():
    with pytest.raises(ValidationError):
        RunConfig(command="region")
    assert RunConfig(command="simulate", analytic=True).seed is None
    assert not RunConfig(command="bounds").stochastic
    with pytest.raises(ValidationError):
        RunConfig(command="bounds", samples=10)


def test_target_degrees_range():
    with pytest.raises(ValidationError):
        TargetSpec(label="x", phases_deg=(0.0, 400.0, 0.0))


def test_experimental_targets_go_through_the_phase_map():
    entry = TargetSpec(label="x", phases_deg=(30.0, 60.0, 0.0), convention=PhaseConvention.EXPERIMENTAL)
    assert resolve_target(entry).degrees == pytest.approx((90.0, 150.0, 270.0))


def test_spawned_streams_are_independent_and_reproducible():
    first = [g.integers(1 << 30) for g in spawn_generators(5, 3)]
    second = [g.integers(1 << 30) for g in spawn_generators(5, 3)]
    assert first == second
    assert len(set(first)) == 3
    assert spawn_generators(None, 2) == [None, None]
