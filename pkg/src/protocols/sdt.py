"""SuperDense Teleportation of equimodular qudits."""

from __future__ import annotations

import logging
import math
from typing import Literal, overload

import numpy as np

from src.qcore import (
    MeasurementBasis,
    PureState,
    UnitaryOp,
    apply_unitary,
    project_outcome,
)

from .bases import BasisName, alice_basis
from .states import encode_on_entangled, equimodular_state
from .types import EquimodularPhases, Protocol, ProtocolTranscript

logger = logging.getLogger(__name__)


def classical_bits_for(outcomes: int) -> int:
    return math.ceil(math.log2(outcomes)) if outcomes > 1 else 0


def phase_correction(vector: PureState) -> UnitaryOp:
    """Diagonal unitary undoing the phases Alice's vector imprints on Bob's heralded state.

    Requires every amplitude of ``vector`` to have equal modulus. The global phase is
    fixed so the first entry is 1, except that a real ±1 pattern with a majority of
    -1 entries is negated.
    """
    amplitudes = vector.amplitudes
    moduli = np.abs(amplitudes)
    if not np.allclose(moduli, moduli[0], atol=1e-12):
        raise ValueError("phase correction needs a basis vector unbiased to the encoding basis")
    phases = amplitudes / moduli
    phases = phases / phases[0]
    if np.allclose(phases.imag, 0.0, atol=1e-12):
        phases = np.sign(phases.real).astype(complex)
        if np.count_nonzero(phases.real < 0) > phases.size / 2:
            phases = -phases
    return UnitaryOp.diagonal(phases)


def sdt_correction(outcome: int | str, d: int = 4, basis: BasisName = "spin_orbit") -> UnitaryOp:
    """Bob's correction for Alice's outcome.

    Spin-orbit outcomes map to a single π phase: |3⟩ for a+, |1⟩ for a-, |2⟩ for b+
    and |0⟩ for b-. Fourier outcome k maps to diag(e^{i2πjk/d}).
    """
    mb = alice_basis(basis, d)
    return phase_correction(mb.vectors[mb.outcome_index(outcome)])


def _transcript(p: EquimodularPhases, mb: MeasurementBasis, outcome: int) -> ProtocolTranscript:
    target = equimodular_state(p)
    joint = encode_on_entangled(p)
    probability, heralded = project_outcome(joint, mb, outcome)
    if heralded is None:
        raise RuntimeError(f"SDT outcome {outcome} has zero probability; basis is not unbiased")
    correction = phase_correction(mb.vectors[outcome])
    bob_final = apply_unitary(correction, heralded)
    logger.debug(f"SDT d={p.d} outcome={mb.label(outcome)} p={probability:.6f}")
    return ProtocolTranscript(
        protocol=Protocol.SDT,
        target=target,
        encoded_joint=joint,
        alice_outcome=outcome,
        outcome_label=mb.label(outcome),
        probability=probability,
        classical_bits=classical_bits_for(mb.dim),
        correction=correction,
        bob_final=bob_final,
        succeeded=True,
    )


@overload
def run_sdt(
    p: EquimodularPhases,
    *,
    rng: np.random.Generator,
    exhaustive: Literal[False] = False,
    basis: BasisName | None = None,
) -> ProtocolTranscript: ...


@overload
def run_sdt(
    p: EquimodularPhases,
    *,
    rng: None = None,
    exhaustive: Literal[True],
    basis: BasisName | None = None,
) -> list[ProtocolTranscript]: ...


def run_sdt(
    p: EquimodularPhases,
    *,
    rng: np.random.Generator | None = None,
    exhaustive: bool = False,
    basis: BasisName | None = None,
) -> ProtocolTranscript | list[ProtocolTranscript]:
    """Run SDT once with a sampled outcome, or for every outcome when ``exhaustive``.

    ``basis`` defaults to the spin-orbit basis for d=4 and the Fourier basis otherwise.
    """
    if p.d < 2:
        raise ValueError("SDT needs d >= 2")
    mb = alice_basis(basis, p.d)
    if exhaustive:
        return [_transcript(p, mb, k) for k in range(mb.dim)]
    if rng is None:
        raise ValueError("a random generator is required for a sampled run")
    probs = sdt_outcome_probabilities(p, basis)
    outcome = int(rng.choice(mb.dim, p=probs / probs.sum()))
    return _transcript(p, mb, outcome)


def sample_outcome_frequencies(
    p: EquimodularPhases,
    runs: int,
    rng: np.random.Generator,
    basis: BasisName | None = None,
) -> np.ndarray:
    """Empirical distribution of Alice's outcomes over ``runs`` sampled protocol runs."""
    if runs < 1:
        raise ValueError("runs must be >= 1")
    probs = sdt_outcome_probabilities(p, basis)
    counts = rng.multinomial(runs, probs / probs.sum())
    return counts / runs


def sdt_outcome_probabilities(p: EquimodularPhases, basis: BasisName | None = None) -> np.ndarray:
    mb = alice_basis(basis, p.d)
    joint = encode_on_entangled(p)
    return np.array([project_outcome(joint, mb, k)[0] for k in range(mb.dim)])


def correction_table(basis: BasisName | None = None, d: int = 4) -> list[UnitaryOp]:
    """Bob's correction for every outcome, in outcome order."""
    mb = alice_basis(basis, d)
    return [phase_correction(v) for v in mb.vectors]
