from __future__ import annotations

from typing import Literal

import numpy as np

from src.qcore import MeasurementBasis

BasisName = Literal["spin_orbit", "fourier"]

SPIN_ORBIT_LABELS = ("a+", "a-", "b+", "b-")
BELL_LABELS = ("Phi+", "Psi+", "Phi-", "Psi-")


def fourier_mub(d: int) -> MeasurementBasis:
    """Vector k has amplitudes e^{i2πjk/d}/√d."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    j, k = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    columns = np.exp(2j * np.pi * j * k / d) / np.sqrt(d)
    return MeasurementBasis.from_columns(columns, name="fourier")


def spin_orbit_basis() -> MeasurementBasis:
    """Alice's polarization-controlled spatial-mode basis a±, b± on the ququart.

    Levels are |0⟩=Hr, |1⟩=Hl, |2⟩=Vr, |3⟩=Vl.
    """
    columns = 0.5 * np.array(
        [
            [1, 1, 1, 1],
            [1, -1, 1, -1],
            [1, 1, -1, -1],
            [-1, 1, 1, -1],
        ],
        dtype=complex,
    )
    return MeasurementBasis.from_columns(columns, labels=SPIN_ORBIT_LABELS, name="spin_orbit")


def bell_basis() -> MeasurementBasis:
    s = 1.0 / np.sqrt(2.0)
    columns = s * np.array(
        [
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [0, 1, 0, -1],
            [1, 0, -1, 0],
        ],
        dtype=complex,
    )
    return MeasurementBasis.from_columns(columns, labels=BELL_LABELS, name="bell")


def alice_basis(name: BasisName | None, d: int) -> MeasurementBasis:
    """Resolve Alice's measurement basis; ``None`` picks spin-orbit at d=4, Fourier otherwise."""
    if name is None:
        name = "spin_orbit" if d == 4 else "fourier"
    if name == "spin_orbit":
        if d != 4:
            raise ValueError(f"spin_orbit basis exists only for d=4, got d={d}")
        return spin_orbit_basis()
    if name == "fourier":
        return fourier_mub(d)
    raise ValueError(f"unknown basis {name!r}; expected spin_orbit or fourier")
