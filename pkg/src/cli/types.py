from __future__ import annotations

import math
from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.expsim import ExperimentalPhase, NoiseModel
from src.protocols import TARGET_PHASES_DEG
from src.tomography import Likelihood

Command = Literal["simulate", "tomo", "bounds", "fringes", "region", "resources"]
OutputFormat = Literal["csv", "json", "table"]
BoundsTable = Literal["fidelity", "volumes", "packing"]

REGION_DEFAULT_SAMPLES = 1_000_000


class PhaseConvention(str, Enum):
    CANONICAL = "canonical"
    EXPERIMENTAL = "experimental"


def _check_degrees(values: tuple[float, ...]) -> tuple[float, ...]:
    for x in values:
        if not math.isfinite(x) or not 0.0 <= x <= 360.0:
            raise ValueError(f"phase {x} deg outside [0, 360]")
    return values


class TargetSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    label: str
    phases_deg: tuple[float, float, float]
    convention: PhaseConvention = PhaseConvention.CANONICAL

    @field_validator("phases_deg")
    @classmethod
    def _in_range(cls, v: tuple[float, float, float]) -> tuple[float, float, float]:
        return _check_degrees(v)


class AngleGrid(BaseModel):
    model_config = ConfigDict(extra="forbid")

    start: float = 0.0
    stop: float = 360.0
    step: float = Field(default=5.0, gt=0.0)

    @model_validator(mode="after")
    def _ordered(self) -> "AngleGrid":
        if self.stop < self.start:
            raise ValueError("angles: stop must not precede start")
        return self


def default_targets() -> list[TargetSpec]:
    return [TargetSpec(label=label, phases_deg=phases) for label, phases in TARGET_PHASES_DEG.items()]


class RunConfig(BaseModel):
    """Every parameter of a CLI run; defaults < config file < flags."""

    model_config = ConfigDict(extra="forbid")

    command: Command
    seed: int | None = Field(default=None, ge=0)
    targets: list[TargetSpec] = Field(default_factory=default_targets, min_length=1)
    noise: NoiseModel = Field(default_factory=NoiseModel)
    shots: int = Field(default=10_000, ge=1)
    analytic: bool = False
    basis: Literal["spin_orbit", "fourier"] = "spin_orbit"
    likelihood: Likelihood = Likelihood.GAUSSIAN
    samples: int = Field(default=0, ge=0)
    resolution: int = Field(default=200, ge=2)
    table: BoundsTable = "fidelity"
    dims: list[int] = Field(default_factory=lambda: [2, 3, 4, 5, 8], min_length=1)
    n_max: int = Field(default=41, ge=3)
    packing_c: float = Field(default=1.0, gt=0.0)
    vary: ExperimentalPhase = ExperimentalPhase.PHI_A
    fixed_deg: tuple[float, float, float] = (0.0, 0.0, 0.0)
    angles: AngleGrid = Field(default_factory=AngleGrid)
    resource_n: list[int] = Field(default_factory=lambda: [2, 3, 4, 6], min_length=1)
    counts_path: str | None = None
    target_deg: tuple[float, float, float] | None = None
    out: str | None = None
    format: OutputFormat = "csv"
    verbose: bool = False

    @field_validator("dims", "resource_n")
    @classmethod
    def _positive_entries(cls, v: list[int]) -> list[int]:
        if any(x < 1 for x in v):
            raise ValueError("entries must be >= 1")
        return v

    @field_validator("fixed_deg", "target_deg")
    @classmethod
    def _degrees_in_range(cls, v: tuple[float, float, float] | None) -> tuple[float, float, float] | None:
        return None if v is None else _check_degrees(v)

    @property
    def stochastic(self) -> bool:
        if self.command == "simulate":
            return not self.analytic
        if self.command == "region":
            return True
        if self.command == "bounds":
            return self.table == "fidelity" and self.samples > 0
        return False

    @model_validator(mode="after")
    def _command_requirements(self) -> "RunConfig":
        if self.stochastic and self.seed is None:
            raise ValueError(f"seed is required for a stochastic '{self.command}' run (pass --seed)")
        if self.command == "tomo" and not self.counts_path:
            raise ValueError("tomo needs a counts file (pass --counts)")
        return self
