"""Bob's 36-setting tomography schedule, {H,V,D,A,R,L} ⊗ {h,v,d,a,r,l}."""

from __future__ import annotations

import numpy as np

from src.qcore import DensityMatrix
from src.qcore.errors import check_dims

from .types import MeasurementSetting, Polarization, SpatialMode

_S = 1.0 / np.sqrt(2.0)

POLARIZATION_VECTORS: dict[Polarization, np.ndarray] = {
    Polarization.H: np.array([1, 0], dtype=complex),
    Polarization.V: np.array([0, 1], dtype=complex),
    Polarization.D: _S * np.array([1, 1], dtype=complex),
    Polarization.A: _S * np.array([1, -1], dtype=complex),
    Polarization.R: _S * np.array([1, 1j], dtype=complex),
    Polarization.L: _S * np.array([1, -1j], dtype=complex),
}

# Spatial qubit in the (r, l) basis: h=(r+l)/√2, v=(r-l)/√2, d=(r+il)/√2, a=(r-il)/√2.
SPATIAL_VECTORS: dict[SpatialMode, np.ndarray] = {
    SpatialMode.h: _S * np.array([1, 1], dtype=complex),
    SpatialMode.v: _S * np.array([1, -1], dtype=complex),
    SpatialMode.d: _S * np.array([1, 1j], dtype=complex),
    SpatialMode.a: _S * np.array([1, -1j], dtype=complex),
    SpatialMode.r: np.array([1, 0], dtype=complex),
    SpatialMode.l: np.array([0, 1], dtype=complex),
}

POLARIZATION_ORDER = tuple(Polarization)
SPATIAL_ORDER = tuple(SpatialMode)


def tomography_settings() -> list[MeasurementSetting]:
    """Polarization-major order: index = 6·pol + spatial."""
    return [MeasurementSetting(polarization=p, spatial=s) for p in POLARIZATION_ORDER for s in SPATIAL_ORDER]


def setting_index(s: MeasurementSetting) -> int:
    return 6 * POLARIZATION_ORDER.index(s.polarization) + SPATIAL_ORDER.index(s.spatial)


def setting_vector(s: MeasurementSetting) -> np.ndarray:
    return np.kron(POLARIZATION_VECTORS[s.polarization], SPATIAL_VECTORS[s.spatial])


def setting_projector(s: MeasurementSetting) -> np.ndarray:
    v = setting_vector(s)
    return np.outer(v, v.conj())


def setting_probability(rho: DensityMatrix, s: MeasurementSetting) -> float:
    check_dims(4, rho.dim)
    v = setting_vector(s)
    return float(np.clip(np.vdot(v, rho.entries @ v).real, 0.0, 1.0))


def setting_probabilities(rho: DensityMatrix, settings: list[MeasurementSetting] | None = None) -> np.ndarray:
    settings = settings if settings is not None else tomography_settings()
    return np.array([setting_probability(rho, s) for s in settings])


FRINGE_SETTINGS: tuple[MeasurementSetting, ...] = (
    MeasurementSetting(polarization=Polarization.H, spatial=SpatialMode.h),
    MeasurementSetting(polarization=Polarization.D, spatial=SpatialMode.r),
    MeasurementSetting(polarization=Polarization.D, spatial=SpatialMode.l),
)
