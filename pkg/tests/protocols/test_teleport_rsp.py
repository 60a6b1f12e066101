import numpy as np
import pytest
from pydantic import ValidationError

from src.protocols import (
    Protocol,
    ProtocolTranscript,
    run_qt_qubit,
    run_rsp_qubit_probabilistic,
    rsp_success_rate,
)
from src.protocols.rsp import charles_rotation
from src.protocols.teleport import qt_outcome_probabilities
from src.qcore import DimensionMismatchError, UnitaryOp, ket, random_state


def test_qt_every_outcome_recovers_input(rng):
    psi = random_state(2, rng)
    transcripts = run_qt_qubit(psi, exhaustive=True)
    assert [t.outcome_label for t in transcripts] == ["Phi+", "Psi+", "Phi-", "Psi-"]
    for t in transcripts:
        assert t.protocol is Protocol.QT
        assert t.classical_bits == 2
        assert t.probability == pytest.approx(0.25)
        assert t.fidelity == pytest.approx(1.0)


def test_qt_outcome_probabilities_are_uniform(rng):
    assert qt_outcome_probabilities(random_state(2, rng)) == pytest.approx([0.25] * 4)


def test_qt_sampled_run(rng):
    psi = random_state(2, rng)
    assert run_qt_qubit(psi, rng=rng).fidelity == pytest.approx(1.0)
    with pytest.raises(ValueError):
        run_qt_qubit(psi)


def test_qt_rejects_qudit_input():
    with pytest.raises(DimensionMismatchError):
        run_qt_qubit(ket(3, 0), exhaustive=True)


def test_charles_rotation_is_unitary(rng):
    u = charles_rotation(random_state(2, rng)).matrix
    assert np.allclose(u.conj().T @ u, np.eye(2))


def test_rsp_heralded_success_prepares_target(rng):
    target = random_state(2, rng)
    attempts = [run_rsp_qubit_probabilistic(target, rng) for _ in range(40)]
    successes = [t for t in attempts if t.succeeded]
    failures = [t for t in attempts if not t.succeeded]
    assert successes and failures
    for t in successes:
        assert t.protocol is Protocol.RSP_PROB
        assert t.classical_bits == 1
        assert t.probability == pytest.approx(0.5)
        assert t.fidelity == pytest.approx(1.0)
    for t in failures:
        assert t.fidelity == pytest.approx(0.0, abs=1e-12)


def test_rsp_success_rate(rng):
    runs = 100_000
    rate = rsp_success_rate(random_state(2, rng), runs, rng)
    assert abs(rate - 0.5) < 4 * np.sqrt(0.25 / runs)


def test_sdt_transcript_must_succeed():
    psi = ket(2, 0)
    with pytest.raises(ValidationError):
        ProtocolTranscript(
            protocol=Protocol.SDT,
            target=psi,
            encoded_joint=ket(4, 0),
            alice_outcome=0,
            outcome_label="0",
            probability=0.5,
            classical_bits=1,
            correction=UnitaryOp.identity(2),
            bob_final=psi,
            succeeded=False,
        )
