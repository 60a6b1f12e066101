"""Entropy-number and packing-number bounds."""

from __future__ import annotations

import math

from .types import PackingBounds

# Known packing densities of Euclidean space (line, hexagonal plane).
PACKING_DENSITY: dict[int, float] = {1: 1.0, 2: math.pi / math.sqrt(18.0)}


def log_entropy_number_bound(n: int, epsilon: float, base: float = math.e) -> float:
    """log of (1 + 2/ε)^n in the given base."""
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return n * math.log1p(2.0 / epsilon) / math.log(base)


def entropy_number_bound(n: int, epsilon: float) -> float:
    """(1 + 2/ε)^n covering-number estimate of the unit ball."""
    try:
        return math.exp(log_entropy_number_bound(n, epsilon))
    except OverflowError:
        return math.inf


def sudakov_threshold(C: float = 1.0) -> float:
    if C <= 0:
        raise ValueError(f"C must be positive, got {C}")
    return math.log(2.0) / (32.0 * math.pi * C * C)


def sudakov_packing_bounds(n: int, C: float = 1.0, delta: float | None = None) -> PackingBounds:
    """log2 P ≥ n/(8πC²) for δ at or below the threshold; ln P ≤ 2n/δ.

    ``delta`` defaults to the threshold itself.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    threshold = sudakov_threshold(C)
    delta = threshold if delta is None else delta
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    return PackingBounds(
        n=n,
        C=C,
        delta=delta,
        delta_threshold=threshold,
        lower_log2=n / (8.0 * math.pi * C * C),
        upper_ln=2.0 * n / delta,
    )


def distinguishable_state_count(phase_error_deg: float, n_params: int) -> float:
    """States resolvable per phase at a given error, raised to the number of phases."""
    if phase_error_deg <= 0:
        raise ValueError("phase error must be positive")
    return (360.0 / (2.0 * phase_error_deg)) ** n_params
