import io
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from src.expsim import NoiseModel
from src.protocols import TARGET_PHASES_DEG, EquimodularPhases

GOLDEN = Path(__file__).resolve().parent / "fixtures" / "golden"


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20150611)


@pytest.fixture()
def row_a_phases() -> EquimodularPhases:
    return EquimodularPhases.from_degrees(TARGET_PHASES_DEG["a"])


@pytest.fixture()
def noiseless() -> NoiseModel:
    return NoiseModel()


@pytest.fixture()
def random_phases_factory():
    def _factory(d: int, rng: np.random.Generator) -> EquimodularPhases:
        return EquimodularPhases(d=d, phases=tuple(rng.uniform(0.0, 2.0 * np.pi, size=d - 1)))

    return _factory


@pytest.fixture()
def assert_matches_golden():
    """Header must match byte for byte; values to 1e-9."""

    def _check(text: str, name: str) -> None:
        expected_text = (GOLDEN / name).read_text(encoding="utf-8")
        assert text.splitlines()[0] == expected_text.splitlines()[0]
        actual = pd.read_csv(io.StringIO(text), keep_default_na=False)
        expected = pd.read_csv(io.StringIO(expected_text), keep_default_na=False)
        pd.testing.assert_frame_equal(actual, expected, check_dtype=False, check_exact=False, rtol=1e-9, atol=1e-9)

    return _check
