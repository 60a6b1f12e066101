from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from src.protocols import EquimodularPhases
from src.qcore import DensityMatrix


class InsufficientSettingsError(ValueError):
    """Fewer than dim² linearly independent projectors among the records."""


class EmptyCountsError(ValueError):
    """Every record has zero counts; there is nothing to fit."""


class UndefinedPhaseError(ValueError):
    """A coherence with the reference level vanished, so its phase is undefined."""

    def __init__(self, level: int, magnitude: float) -> None:
        super().__init__(f"phase of level {level} is undefined (|rho_0{level}| = {magnitude:.3e})")
        self.level = level
        self.magnitude = magnitude


class Likelihood(str, Enum):
    GAUSSIAN = "gaussian"
    POISSON = "poisson"


class ReconstructionResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    rho: DensityMatrix
    neg_log_likelihood: float
    iterations: int = Field(ge=0)
    converged: bool
    history: tuple[float, ...] = ()


class PhaseEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    phases: EquimodularPhases
    uncertainty: tuple[float, ...] | None = None

    @property
    def degrees(self) -> tuple[float, ...]:
        return self.phases.degrees


class PipelineResult(BaseModel):
    """Per-outcome fits, their corrected weighted average, and the derived report quantities."""

    model_config = ConfigDict(frozen=True)

    per_outcome: tuple[ReconstructionResult, ...]
    weights: tuple[float, ...]
    rho: DensityMatrix
    estimate: PhaseEstimate
    fidelity: float = Field(ge=0.0, le=1.0)
    metadata: dict[str, Any] = Field(default_factory=dict)
