from __future__ import annotations

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class FidelityKind(str, Enum):
    GENERAL = "general"
    EQUIMODULAR = "equimodular"


class VolumeSpace(str, Enum):
    TORUS = "torus"
    SPHERE = "sphere"
    BALL = "ball"
    PROJECTIVE = "projective"


class Evaluation(str, Enum):
    EXACT = "exact"
    ASYMPTOTIC = "asymptotic"


class FidelityBound(BaseModel):
    """Best average fidelity of measure-and-prepare (classical) teleportation."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(ge=1)
    n_params: int = Field(ge=0)
    value: float = Field(ge=0.0, le=1.0)
    kind: FidelityKind

    @model_validator(mode="after")
    def _parameter_count(self) -> "FidelityBound":
        expected = 2 * self.d - 2 if self.kind is FidelityKind.GENERAL else self.d - 1
        if self.n_params != expected:
            raise ValueError(f"{self.kind.value} states of dimension {self.d} have {expected} parameters")
        return self


class VolumeReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    space: VolumeSpace
    volume: float = Field(gt=0.0)
    log_volume: float
    evaluation: Evaluation = Evaluation.EXACT


class PackingBounds(BaseModel):
    """Sudakov-type bounds on the packing number of general states at separation δ."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    C: float = Field(gt=0.0)
    delta: float = Field(gt=0.0)
    delta_threshold: float
    lower_log2: float
    upper_ln: float

    @property
    def lower_valid(self) -> bool:
        return self.delta <= self.delta_threshold

    @model_validator(mode="after")
    def _ordered(self) -> "PackingBounds":
        if self.lower_valid and self.lower_log2 * math.log(2.0) > self.upper_ln:
            raise ValueError("packing lower bound exceeds the upper bound")
        return self


class MonteCarloEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    estimate: float
    standard_error: float = Field(ge=0.0)
    samples: int = Field(ge=1)


class RegionEstimate(BaseModel):
    """Share of the positive orthant of outcome amplitudes reachable by equimodular inputs."""

    model_config = ConfigDict(frozen=True)

    d: int
    fraction: float = Field(ge=0.0, le=1.0)
    standard_error: float = Field(ge=0.0)
    samples: int
    resolution: int
    occupied_cells: int
    boundary_cells: int
