from __future__ import annotations

import math
from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.qcore import PureState, UnitaryOp, fidelity

TWO_PI = 2.0 * math.pi


def wrap_phase(value: float) -> float:
    """Canonical representative of an angle in [0, 2π)."""
    wrapped = math.fmod(float(value), TWO_PI)
    if wrapped < 0.0:
        wrapped += TWO_PI
    # fmod of a tiny negative number can land exactly on 2π
    return 0.0 if wrapped >= TWO_PI else wrapped


class Protocol(str, Enum):
    SDT = "SDT"
    QT = "QT"
    RSP_PROB = "RSP_prob"
    RSP_DET = "RSP_det"


class CharlesKnowledge(str, Enum):
    OPTIONAL = "optional"
    REQUIRED = "required"


class EquimodularPhases(BaseModel):
    """Relative phases φ_1..φ_{d-1} of an equimodular qudit (φ_0 = 0)."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(ge=1)
    phases: tuple[float, ...]

    @model_validator(mode="before")
    @classmethod
    def _infer_dimension(cls, data: Any) -> Any:
        if isinstance(data, dict) and "d" not in data and "phases" in data:
            data = {**data, "d": len(tuple(data["phases"])) + 1}
        return data

    @field_validator("phases", mode="before")
    @classmethod
    def _canonicalize(cls, v: Any) -> tuple[float, ...]:
        return tuple(wrap_phase(float(x)) for x in v)

    @model_validator(mode="after")
    def _check_length(self) -> "EquimodularPhases":
        if len(self.phases) != self.d - 1:
            raise ValueError(f"dimension {self.d} needs {self.d - 1} phases, got {len(self.phases)}")
        return self

    @classmethod
    def from_degrees(cls, degrees: tuple[float, ...] | list[float]) -> "EquimodularPhases":
        return cls(phases=tuple(math.radians(x) for x in degrees))

    @property
    def degrees(self) -> tuple[float, ...]:
        return tuple(math.degrees(x) for x in self.phases)

    @property
    def full(self) -> np.ndarray:
        """All d phases including the reference φ_0 = 0."""
        return np.concatenate(([0.0], np.asarray(self.phases, dtype=float)))


class ExperimentalPhases(BaseModel):
    """Phases set on the encoding optics; related to EquimodularPhases by ``phase_map``."""

    model_config = ConfigDict(frozen=True)

    phi_a: float
    phi_b: float
    phi_c: float

    @field_validator("phi_a", "phi_b", "phi_c")
    @classmethod
    def _canonicalize(cls, v: float) -> float:
        return wrap_phase(v)

    @classmethod
    def from_degrees(cls, phi_a: float, phi_b: float, phi_c: float) -> "ExperimentalPhases":
        return cls(phi_a=math.radians(phi_a), phi_b=math.radians(phi_b), phi_c=math.radians(phi_c))

    def with_phase(self, name: str, value: float) -> "ExperimentalPhases":
        return self.model_copy(update={name: wrap_phase(value)})

    @property
    def degrees(self) -> tuple[float, float, float]:
        return (math.degrees(self.phi_a), math.degrees(self.phi_b), math.degrees(self.phi_c))


class ProtocolTranscript(BaseModel):
    """One run: encode, Alice's measurement, the classical message, Bob's correction."""

    model_config = ConfigDict(frozen=True)

    protocol: Protocol
    target: PureState
    encoded_joint: PureState
    alice_outcome: int = Field(ge=0)
    outcome_label: str
    probability: float = Field(ge=0.0, le=1.0)
    classical_bits: int = Field(ge=0)
    correction: UnitaryOp
    bob_final: PureState
    succeeded: bool

    @model_validator(mode="after")
    def _check_protocol_rules(self) -> "ProtocolTranscript":
        if self.protocol is Protocol.SDT and not self.succeeded:
            raise ValueError("SDT runs always succeed")
        return self

    @property
    def fidelity(self) -> float:
        return fidelity(self.bob_final, self.target)


class ResourceProfile(BaseModel):
    """One row of the resource comparison between protocols."""

    model_config = ConfigDict(frozen=True)

    protocol: Protocol
    n_params: int = Field(ge=1)
    state_dim: int = Field(ge=1)
    success_probability: float = Field(gt=0.0, le=1.0)
    classical_bits: float = Field(ge=0.0)
    alice_detectors: int = Field(ge=1)
    bob_transformations: int = Field(ge=1)
    charles_knowledge: CharlesKnowledge
