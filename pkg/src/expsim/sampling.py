"""Heralded Bob states and coincidence counts over the tomography schedule."""

from __future__ import annotations

import logging

import numpy as np

from src.protocols import EquimodularPhases, alice_basis, encode_on_entangled
from src.protocols.bases import BasisName
from src.protocols.sdt import phase_correction
from src.qcore import DensityMatrix, apply_unitary, project_outcome_mixed

from .noise import apply_noise
from .settings import setting_projector, tomography_settings
from .types import CountRecord, NoiseModel

logger = logging.getLogger(__name__)


def heralded_states(
    phases: EquimodularPhases,
    noise: NoiseModel,
    basis: BasisName | None = None,
) -> list[tuple[float, DensityMatrix | None]]:
    """Per Alice outcome: heralding probability and Bob's uncorrected state after noise."""
    mb = alice_basis(basis, phases.d)
    joint = apply_noise(encode_on_entangled(phases), noise)
    return [project_outcome_mixed(joint, mb, k) for k in range(mb.dim)]


def corrected_bob_state(
    phases: EquimodularPhases,
    noise: NoiseModel,
    basis: BasisName | None = None,
) -> DensityMatrix:
    """Bob's state under ideal feed-forward: probability-weighted corrected branches."""
    mb = alice_basis(basis, phases.d)
    total = np.zeros((phases.d, phases.d), dtype=complex)
    for k, (probability, rho) in enumerate(heralded_states(phases, noise, basis)):
        if rho is None:
            continue
        corrected = apply_unitary(phase_correction(mb.vectors[k]), rho)
        total += probability * corrected.entries
    return DensityMatrix.from_operator(total)


def simulate_counts(
    phases: EquimodularPhases,
    noise: NoiseModel,
    shots_per_setting: int,
    rng: np.random.Generator | None = None,
    *,
    analytic: bool = False,
    basis: BasisName | None = None,
) -> list[CountRecord]:
    """Coincidence records for every (Alice outcome, setting) pair.

    Per setting, ``shots_per_setting`` pair trials split multinomially over Alice's
    outcomes; Bob's clicks within each heralded subset are binomial. With
    ``analytic`` the expectations are returned instead of samples. Records are
    ordered by outcome, then setting index.
    """
    if shots_per_setting < 1:
        raise ValueError(f"shots_per_setting must be >= 1, got {shots_per_setting}")
    if phases.d != 4:
        raise ValueError("count simulation models the ququart experiment (d=4)")
    if not analytic and rng is None:
        raise ValueError("a random generator is required unless analytic=True")

    branches = heralded_states(phases, noise, basis)
    herald_probs = np.array([p for p, _ in branches])
    herald_probs = herald_probs / herald_probs.sum()
    settings = tomography_settings()
    projectors = np.stack([setting_projector(s) for s in settings])

    # bob_probs[k, s] = P(click on setting s | outcome k)
    bob_probs = np.zeros((len(branches), len(settings)))
    for k, (_, rho) in enumerate(branches):
        if rho is not None:
            bob_probs[k] = np.clip(np.einsum("sij,ji->s", projectors, rho.entries).real, 0.0, 1.0)

    shots = np.zeros_like(bob_probs)
    counts = np.zeros_like(bob_probs)
    if analytic:
        shots[:] = shots_per_setting * herald_probs[:, None]
        counts[:] = shots * bob_probs
    else:
        for s in range(len(settings)):
            heralded = rng.multinomial(shots_per_setting, herald_probs)
            shots[:, s] = heralded
            counts[:, s] = rng.binomial(heralded, bob_probs[:, s])

    logger.debug(f"Simulated {counts.size} count records (analytic={analytic})")
    return [
        CountRecord(alice_outcome=k, setting=settings[s], counts=float(counts[k, s]), shots=float(shots[k, s]))
        for k in range(len(branches))
        for s in range(len(settings))
    ]
