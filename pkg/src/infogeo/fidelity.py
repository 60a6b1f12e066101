"""Classical (measure-and-prepare) teleportation fidelity limits."""

from __future__ import annotations

import logging

import numpy as np

from .types import FidelityBound, FidelityKind, MonteCarloEstimate

logger = logging.getLogger(__name__)

DEFAULT_CHUNK = 1 << 16


def _check_dim(d: int) -> None:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")


def classical_fidelity_general(d: int) -> float:
    _check_dim(d)
    return 2.0 / (1.0 + d)


def classical_fidelity_equimodular(d: int) -> float:
    _check_dim(d)
    return (2.0 * d * d - d) / d**3


def classical_fidelity_general_params(n_params: int) -> float:
    """Same limit in terms of N = 2d - 2 real parameters."""
    return 4.0 / (n_params + 4.0)


def classical_fidelity_equimodular_params(n_params: int) -> float:
    """Same limit in terms of N = d - 1 phases."""
    return (2.0 * n_params + 1.0) / (n_params + 1.0) ** 2


def fidelity_bound(kind: FidelityKind | str, d: int) -> FidelityBound:
    kind = FidelityKind(kind)
    if kind is FidelityKind.GENERAL:
        return FidelityBound(d=d, n_params=2 * d - 2, value=classical_fidelity_general(d), kind=kind)
    return FidelityBound(d=d, n_params=d - 1, value=classical_fidelity_equimodular(d), kind=kind)


def _strategy_values(phases: np.ndarray, d: int) -> np.ndarray:
    # Measure in the Fourier basis, re-prepare the detected vector: F = Σ_k p_k².
    psi = np.exp(1j * np.concatenate([np.zeros((phases.shape[0], 1)), phases], axis=1)) / np.sqrt(d)
    p = np.abs(np.fft.fft(psi, axis=1)) ** 2 / d
    return np.sum(p**2, axis=1)


def _integrand_values(phases: np.ndarray, d: int) -> np.ndarray:
    s = 1.0 + np.sum(np.exp(1j * phases), axis=1)
    return np.abs(s) ** 4 / d**3


def mc_classical_fidelity_equimodular(
    d: int,
    samples: int,
    rng: np.random.Generator,
    *,
    estimator: str = "strategy",
    chunk_size: int = DEFAULT_CHUNK,
) -> MonteCarloEstimate:
    """Monte Carlo average over uniform phases of the classical strategy's fidelity.

    ``estimator`` is ``"strategy"`` (simulate the Fourier-basis guess) or
    ``"integrand"`` (average |Σ_j e^{iφ_j}|⁴/d³ directly).
    """
    _check_dim(d)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    values_of = {"strategy": _strategy_values, "integrand": _integrand_values}.get(estimator)
    if values_of is None:
        raise ValueError(f"unknown estimator {estimator!r}")
    if d == 1:
        return MonteCarloEstimate(estimate=1.0, standard_error=0.0, samples=samples)

    total = 0.0
    total_sq = 0.0
    remaining = samples
    while remaining > 0:
        m = min(chunk_size, remaining)
        values = values_of(rng.uniform(0.0, 2.0 * np.pi, size=(m, d - 1)), d)
        total += float(values.sum())
        total_sq += float(np.sum(values**2))
        remaining -= m

    mean = total / samples
    if samples > 1:
        variance = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
        stderr = float(np.sqrt(variance / samples))
    else:
        stderr = 0.0
    logger.debug(f"MC classical fidelity d={d} ({estimator}): {mean:.6f} ± {stderr:.2e}")
    return MonteCarloEstimate(estimate=mean, standard_error=stderr, samples=samples)
