from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.protocols import ExperimentalPhases

PROBABILITY_SLACK = 1e-12


class Polarization(str, Enum):
    H = "H"
    V = "V"
    D = "D"
    A = "A"
    R = "R"
    L = "L"


class SpatialMode(str, Enum):
    h = "h"
    v = "v"
    d = "d"
    a = "a"
    r = "r"
    l = "l"  # noqa: E741


class ExperimentalPhase(str, Enum):
    PHI_A = "phi_a"
    PHI_B = "phi_b"
    PHI_C = "phi_c"


class NoiseModel(BaseModel):
    """Spatial-mode crosstalk on each photon followed by global depolarization."""

    model_config = ConfigDict(frozen=True)

    spatial_crosstalk_alice: float = Field(default=0.0, ge=0.0, le=1.0)
    spatial_crosstalk_bob: float = Field(default=0.0, ge=0.0, le=1.0)
    depolarizing: float = Field(default=0.0, ge=0.0, le=1.0)

    @property
    def is_noiseless(self) -> bool:
        return self.spatial_crosstalk_alice == 0.0 and self.spatial_crosstalk_bob == 0.0 and self.depolarizing == 0.0


class MeasurementSetting(BaseModel):
    model_config = ConfigDict(frozen=True)

    polarization: Polarization
    spatial: SpatialMode

    @property
    def label(self) -> str:
        return f"{self.polarization.value}{self.spatial.value}"


class CountRecord(BaseModel):
    """Coincidences for one (Alice outcome, Bob setting) pair.

    Analytic runs store expectations, so ``counts`` and ``shots`` are real-valued.
    """

    model_config = ConfigDict(frozen=True)

    alice_outcome: int = Field(ge=0, le=3)
    setting: MeasurementSetting
    counts: float = Field(ge=0.0)
    shots: float = Field(ge=0.0)

    @model_validator(mode="after")
    def _counts_within_shots(self) -> "CountRecord":
        if self.counts > self.shots * (1.0 + PROBABILITY_SLACK) + PROBABILITY_SLACK:
            raise ValueError(f"counts {self.counts} exceed shots {self.shots}")
        return self


class FringeScan(BaseModel):
    model_config = ConfigDict(frozen=True)

    varied: ExperimentalPhase
    fixed: ExperimentalPhases
    angles_deg: tuple[float, ...]
    p_hh: tuple[float, ...]
    p_dr: tuple[float, ...]
    p_dl: tuple[float, ...]

    @field_validator("angles_deg")
    @classmethod
    def _non_empty(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if not v:
            raise ValueError("angle grid must not be empty")
        return v

    @field_validator("p_hh", "p_dr", "p_dl")
    @classmethod
    def _probabilities(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if any(x < -PROBABILITY_SLACK or x > 1.0 + PROBABILITY_SLACK for x in v):
            raise ValueError("fringe probabilities must lie in [0, 1]")
        return v

    @model_validator(mode="after")
    def _aligned(self) -> "FringeScan":
        n = len(self.angles_deg)
        if not len(self.p_hh) == len(self.p_dr) == len(self.p_dl) == n:
            raise ValueError("every fringe curve needs one value per angle")
        return self
