"""Qubit quantum teleportation with a Bell-state measurement."""

from __future__ import annotations

import logging

import numpy as np

from src.qcore import PureState, UnitaryOp, apply_unitary, project_outcome, tensor
from src.qcore.errors import check_dims

from .bases import bell_basis
from .sdt import classical_bits_for
from .states import maximally_entangled
from .types import Protocol, ProtocolTranscript

logger = logging.getLogger(__name__)

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# Bob's Pauli correction per Bell outcome (Phi+, Psi+, Phi-, Psi-).
PAULI_CORRECTIONS: tuple[UnitaryOp, ...] = (
    UnitaryOp.identity(2),
    UnitaryOp(matrix=_X),
    UnitaryOp(matrix=_Z),
    UnitaryOp(matrix=_Z @ _X),
)


def _qt_transcript(state: PureState, joint: PureState, outcome: int) -> ProtocolTranscript:
    basis = bell_basis()
    probability, heralded = project_outcome(joint, basis, outcome)
    if heralded is None:
        raise RuntimeError(f"Bell outcome {outcome} has zero probability")
    correction = PAULI_CORRECTIONS[outcome]
    return ProtocolTranscript(
        protocol=Protocol.QT,
        target=state,
        encoded_joint=joint,
        alice_outcome=outcome,
        outcome_label=basis.label(outcome),
        probability=probability,
        classical_bits=classical_bits_for(basis.dim),
        correction=correction,
        bob_final=apply_unitary(correction, heralded),
        succeeded=True,
    )


def qt_outcome_probabilities(state: PureState) -> np.ndarray:
    joint = tensor(state, maximally_entangled(2))
    return np.array([project_outcome(joint, bell_basis(), k)[0] for k in range(4)])


def run_qt_qubit(
    state: PureState,
    *,
    rng: np.random.Generator | None = None,
    exhaustive: bool = False,
) -> ProtocolTranscript | list[ProtocolTranscript]:
    """Teleport ``state`` through Φ+; Alice's Bell measurement acts on (input, her half)."""
    check_dims(2, state.dim, "input qubit dimension")
    joint = tensor(state, maximally_entangled(2))
    if exhaustive:
        return [_qt_transcript(state, joint, k) for k in range(4)]
    if rng is None:
        raise ValueError("a random generator is required for a sampled run")
    probs = qt_outcome_probabilities(state)
    outcome = int(rng.choice(4, p=probs / probs.sum()))
    logger.debug(f"QT outcome {outcome}")
    return _qt_transcript(state, joint, outcome)
