"""Probabilistic remote state preparation of a qubit."""

from __future__ import annotations

import logging

import numpy as np

from src.qcore import (
    PureState,
    UnitaryOp,
    apply_unitary,
    computational_basis,
    project_outcome,
)
from src.qcore.errors import check_dims

from .states import maximally_entangled
from .types import Protocol, ProtocolTranscript

logger = logging.getLogger(__name__)


def charles_rotation(target: PureState) -> UnitaryOp:
    """Rotation on Alice's half of Φ+ mapping the target's conjugate onto |0⟩."""
    check_dims(2, target.dim, "target qubit dimension")
    psi0, psi1 = target.amplitudes
    return UnitaryOp(matrix=np.array([[psi0, psi1], [-psi1.conjugate(), psi0.conjugate()]]))


def prepare_joint(target: PureState) -> PureState:
    rotation = np.kron(charles_rotation(target).matrix, np.eye(2, dtype=complex))
    return apply_unitary(UnitaryOp(matrix=rotation), maximally_entangled(2))


def run_rsp_qubit_probabilistic(target: PureState, rng: np.random.Generator) -> ProtocolTranscript:
    """One heralded attempt: outcome 0 leaves Bob in ``target``, outcome 1 in its orthogonal state."""
    joint = prepare_joint(target)
    basis = computational_basis(2)
    probs = np.array([project_outcome(joint, basis, k)[0] for k in range(2)])
    outcome = int(rng.choice(2, p=probs / probs.sum()))
    probability, heralded = project_outcome(joint, basis, outcome)
    assert heralded is not None
    succeeded = outcome == 0
    logger.debug(f"RSP attempt outcome={outcome} succeeded={succeeded}")
    return ProtocolTranscript(
        protocol=Protocol.RSP_PROB,
        target=target,
        encoded_joint=joint,
        alice_outcome=outcome,
        outcome_label="success" if succeeded else "failure",
        probability=probability,
        classical_bits=1,
        correction=UnitaryOp.identity(2),
        bob_final=heralded,
        succeeded=succeeded,
    )


def rsp_success_rate(target: PureState, runs: int, rng: np.random.Generator) -> float:
    if runs < 1:
        raise ValueError("runs must be >= 1")
    joint = prepare_joint(target)
    basis = computational_basis(2)
    probs = np.array([project_outcome(joint, basis, k)[0] for k in range(2)])
    outcomes = rng.choice(2, size=runs, p=probs / probs.sum())
    return float(np.mean(outcomes == 0))
