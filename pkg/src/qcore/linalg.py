"""Dense linear algebra on small Hilbert spaces.

Joint spaces use row-major indexing: for a ⊗ b the index of ``a`` varies
slowest, so a joint amplitude vector reshapes to ``(dim_a, dim_b)``.
"""

from __future__ import annotations

import logging
from typing import overload

import numpy as np

from .errors import DimensionMismatchError, check_dims
from .types import DensityMatrix, MeasurementBasis, PureState, UnitaryOp

logger = logging.getLogger(__name__)

ZERO_BRANCH_TOL = 1e-15


def ket(dim: int, index: int) -> PureState:
    if not 0 <= index < dim:
        raise ValueError(f"index {index} outside 0..{dim - 1}")
    amplitudes = np.zeros(dim, dtype=complex)
    amplitudes[index] = 1.0
    return PureState(amplitudes=amplitudes)


def computational_basis(dim: int) -> MeasurementBasis:
    return MeasurementBasis.from_columns(np.eye(dim, dtype=complex), name="computational")


def tensor(a: PureState, b: PureState) -> PureState:
    return PureState(amplitudes=np.kron(a.amplitudes, b.amplitudes))


def density_from_state(state: PureState) -> DensityMatrix:
    return DensityMatrix(entries=np.outer(state.amplitudes, state.amplitudes.conj()))


def maximally_mixed(dim: int) -> DensityMatrix:
    return DensityMatrix(entries=np.eye(dim, dtype=complex) / dim)


def as_density(state: PureState | DensityMatrix) -> DensityMatrix:
    return density_from_state(state) if isinstance(state, PureState) else state


def born_probabilities(state: PureState | DensityMatrix, basis: MeasurementBasis) -> np.ndarray:
    """Outcome probabilities ⟨v_k|ρ|v_k⟩ in basis order."""
    check_dims(basis.dim, state.dim)
    vectors = basis.matrix
    if isinstance(state, PureState):
        probs = np.abs(vectors.conj().T @ state.amplitudes) ** 2
    else:
        probs = np.einsum("ik,ij,jk->k", vectors.conj(), state.entries, vectors).real
    return np.clip(probs, 0.0, 1.0)


def fidelity(rho: DensityMatrix | PureState, psi: PureState) -> float:
    """Pure-target fidelity ⟨ψ|ρ|ψ⟩."""
    check_dims(psi.dim, rho.dim)
    if isinstance(rho, PureState):
        value = abs(np.vdot(psi.amplitudes, rho.amplitudes)) ** 2
    else:
        value = np.vdot(psi.amplitudes, rho.entries @ psi.amplitudes).real
    return float(np.clip(value, 0.0, 1.0))


def pure_state_distance(psi: PureState, phi: PureState) -> float:
    check_dims(psi.dim, phi.dim)
    return float(np.linalg.norm(psi.amplitudes - phi.amplitudes))


def equal_up_to_global_phase(psi: PureState, phi: PureState, tol: float = 1e-10) -> bool:
    if psi.dim != phi.dim:
        return False
    return abs(np.vdot(psi.amplitudes, phi.amplitudes)) >= 1.0 - tol


def purity(rho: DensityMatrix) -> float:
    return float(np.trace(rho.entries @ rho.entries).real)


def _split_dims(joint_dim: int, alice_dim: int) -> int:
    if alice_dim <= 0 or joint_dim % alice_dim:
        raise DimensionMismatchError(alice_dim, joint_dim, "joint dimension not divisible by Alice dimension")
    return joint_dim // alice_dim


def project_outcome(joint: PureState, alice_basis: MeasurementBasis, outcome: int) -> tuple[float, PureState | None]:
    """Project the first factor of ``joint`` onto basis vector ``outcome``.

    Returns the branch probability and Bob's normalized state, or ``(0.0, None)``
    when the branch vanishes.
    """
    bob_dim = _split_dims(joint.dim, alice_basis.dim)
    k = alice_basis.outcome_index(outcome)
    amplitudes = joint.amplitudes.reshape(alice_basis.dim, bob_dim)
    branch = alice_basis.vectors[k].amplitudes.conj() @ amplitudes
    probability = float(np.vdot(branch, branch).real)
    if probability < ZERO_BRANCH_TOL:
        logger.debug(f"Outcome {alice_basis.label(k)} has vanishing probability; Bob state undefined")
        return 0.0, None
    return probability, PureState(amplitudes=branch / np.sqrt(probability))


def project_outcome_mixed(
    rho_joint: DensityMatrix, alice_basis: MeasurementBasis, outcome: int
) -> tuple[float, DensityMatrix | None]:
    bob_dim = _split_dims(rho_joint.dim, alice_basis.dim)
    k = alice_basis.outcome_index(outcome)
    d_a = alice_basis.dim
    v = alice_basis.vectors[k].amplitudes
    blocks = rho_joint.entries.reshape(d_a, bob_dim, d_a, bob_dim)
    bob = np.einsum("a,abcd,c->bd", v.conj(), blocks, v)
    probability = float(np.trace(bob).real)
    if probability < ZERO_BRANCH_TOL:
        logger.debug(f"Outcome {alice_basis.label(k)} has vanishing probability; Bob state undefined")
        return 0.0, None
    return probability, DensityMatrix.from_operator(bob)


def partial_trace_first(rho_joint: DensityMatrix | PureState, dim_a: int, dim_b: int) -> DensityMatrix:
    """Trace out the first tensor factor."""
    rho = as_density(rho_joint)
    check_dims(dim_a * dim_b, rho.dim, "joint dimension")
    blocks = rho.entries.reshape(dim_a, dim_b, dim_a, dim_b)
    return DensityMatrix.from_operator(np.einsum("abad->bd", blocks))


@overload
def apply_unitary(u: UnitaryOp, state: PureState) -> PureState: ...


@overload
def apply_unitary(u: UnitaryOp, state: DensityMatrix) -> DensityMatrix: ...


def apply_unitary(u: UnitaryOp, state: PureState | DensityMatrix) -> PureState | DensityMatrix:
    check_dims(u.dim, state.dim)
    if isinstance(state, PureState):
        return PureState(amplitudes=u.matrix @ state.amplitudes)
    return DensityMatrix.from_operator(u.matrix @ state.entries @ u.matrix.conj().T)


def dagger(u: UnitaryOp) -> UnitaryOp:
    return UnitaryOp(matrix=u.matrix.conj().T)


def random_state(dim: int, rng: np.random.Generator) -> PureState:
    """Haar-random pure state."""
    return PureState.from_unnormalized(rng.normal(size=dim) + 1j * rng.normal(size=dim))


def random_unitary(dim: int, rng: np.random.Generator) -> UnitaryOp:
    """Haar-random unitary via QR of a Ginibre matrix with the R-diagonal phase fix."""
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    q = q * (diag / np.abs(diag))
    return UnitaryOp(matrix=q)
