from __future__ import annotations

from typing import Any, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_FLOOR = -1e-9
UNITARY_TOL = 1e-10
ORTHONORMAL_TOL = 1e-10


def _frozen_array(value: Any, *, ndim: int) -> np.ndarray:
    arr = np.array(value, dtype=complex)
    if ndim == 1:
        arr = arr.reshape(-1)
    elif arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("empty array")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite entries")
    arr.setflags(write=False)
    return arr


class PureState(BaseModel):
    """Normalized amplitude vector. Row-major tensor indexing (first factor varies slowest)."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    amplitudes: np.ndarray

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _as_vector(cls, v: Any) -> np.ndarray:
        return _frozen_array(v, ndim=1)

    @model_validator(mode="after")
    def _check_norm(self) -> "PureState":
        norm = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (norm^2={norm:.15f})")
        return self

    @classmethod
    def from_unnormalized(cls, amplitudes: Sequence[complex] | np.ndarray) -> "PureState":
        arr = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(arr)
        if norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(amplitudes=arr / norm)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    def __eq__(self, other: object) -> bool:
        # Rays: equal up to a global phase.
        if not isinstance(other, PureState) or other.dim != self.dim:
            return False
        return abs(abs(np.vdot(self.amplitudes, other.amplitudes)) - 1.0) <= HERMITIAN_TOL

    __hash__ = None  # type: ignore[assignment]


class DensityMatrix(BaseModel):
    """Hermitian, positive semidefinite, unit-trace operator."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    entries: np.ndarray

    @field_validator("entries", mode="before")
    @classmethod
    def _as_matrix(cls, v: Any) -> np.ndarray:
        return _frozen_array(v, ndim=2)

    @model_validator(mode="after")
    def _check_physical(self) -> "DensityMatrix":
        m = self.entries
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
            raise ValueError("density matrix is not Hermitian")
        trace = np.trace(m)
        if abs(trace - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace is {trace.real:.12f}, expected 1")
        min_eig = float(np.min(np.linalg.eigvalsh(m)))
        if min_eig < PSD_FLOOR:
            raise ValueError(f"density matrix has negative eigenvalue {min_eig:.3e}")
        return self

    @classmethod
    def from_operator(cls, operator: np.ndarray) -> "DensityMatrix":
        """Hermitize and trace-normalize a numerically computed positive operator."""
        m = np.asarray(operator, dtype=complex)
        m = 0.5 * (m + m.conj().T)
        trace = np.trace(m).real
        if trace <= 0.0:
            raise ValueError("operator has non-positive trace")
        return cls(entries=m / trace)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DensityMatrix) or other.dim != self.dim:
            return False
        return bool(np.allclose(self.entries, other.entries, atol=HERMITIAN_TOL, rtol=0.0))

    __hash__ = None  # type: ignore[assignment]


class UnitaryOp(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_matrix(cls, v: Any) -> np.ndarray:
        return _frozen_array(v, ndim=2)

    @model_validator(mode="after")
    def _check_unitary(self) -> "UnitaryOp":
        u = self.matrix
        deviation = np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0])))
        if deviation > UNITARY_TOL:
            raise ValueError(f"matrix is not unitary (max deviation {deviation:.3e})")
        return self

    @classmethod
    def identity(cls, dim: int) -> "UnitaryOp":
        return cls(matrix=np.eye(dim, dtype=complex))

    @classmethod
    def diagonal(cls, phases: Sequence[complex] | np.ndarray) -> "UnitaryOp":
        return cls(matrix=np.diag(np.asarray(phases, dtype=complex)))

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitaryOp) or other.dim != self.dim:
            return False
        return bool(np.allclose(self.matrix, other.matrix, atol=UNITARY_TOL, rtol=0.0))

    __hash__ = None  # type: ignore[assignment]


class MeasurementBasis(BaseModel):
    """Complete orthonormal basis; outcome k corresponds to vectors[k]."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    vectors: tuple[PureState, ...]
    labels: tuple[str, ...] = ()
    name: str = ""

    @model_validator(mode="after")
    def _check_orthonormal(self) -> "MeasurementBasis":
        if not self.vectors:
            raise ValueError("basis needs at least one vector")
        dim = self.vectors[0].dim
        if any(v.dim != dim for v in self.vectors):
            raise ValueError("basis vectors have inconsistent dimensions")
        if len(self.vectors) != dim:
            raise ValueError(f"basis of dimension {dim} needs {dim} vectors, got {len(self.vectors)}")
        if self.labels and len(self.labels) != dim:
            raise ValueError("one label per basis vector required")
        gram = self.matrix.conj().T @ self.matrix
        if np.max(np.abs(gram - np.eye(dim))) > ORTHONORMAL_TOL:
            raise ValueError("basis vectors are not orthonormal")
        return self

    @classmethod
    def from_columns(cls, columns: np.ndarray, *, labels: Sequence[str] = (), name: str = "") -> "MeasurementBasis":
        cols = np.asarray(columns, dtype=complex)
        return cls(
            vectors=tuple(PureState(amplitudes=cols[:, k]) for k in range(cols.shape[1])),
            labels=tuple(labels),
            name=name,
        )

    @property
    def dim(self) -> int:
        return self.vectors[0].dim

    @property
    def matrix(self) -> np.ndarray:
        """Basis vectors as columns."""
        return np.column_stack([v.amplitudes for v in self.vectors])

    def outcome_index(self, outcome: int | str) -> int:
        if isinstance(outcome, str):
            if outcome not in self.labels:
                raise ValueError(f"unknown outcome label {outcome!r} for basis {self.name or 'unnamed'}")
            return self.labels.index(outcome)
        index = int(outcome)
        if not 0 <= index < self.dim:
            raise ValueError(f"outcome {outcome} outside 0..{self.dim - 1}")
        return index

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels else str(index)
