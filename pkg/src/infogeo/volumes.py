"""Volumes of equimodular tori, spheres, balls and projective state spaces.

Every quantity has a ``log_`` variant; the plain functions exponentiate it and
return ``inf`` past the float range.
"""

from __future__ import annotations

import math

from scipy.special import gammaln

from .types import Evaluation, VolumeReport, VolumeSpace

LOG_TWO_PI = math.log(2.0 * math.pi)
LOG_PI = math.log(math.pi)


def _exp(log_value: float) -> float:
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf


def _positive(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")


def log_volume_equimodular(n: int) -> float:
    _positive("n", n)
    return (n - 1) * LOG_TWO_PI - 0.5 * (n - 1) * math.log(n)


def volume_equimodular(n: int) -> float:
    """(2π)^{n-1}·n^{-(n-1)/2}: n circles of radius n^{-1/2} modulo a global phase."""
    return _exp(log_volume_equimodular(n))


def log_volume_ball(dim: int) -> float:
    _positive("dim", dim)
    return 0.5 * dim * LOG_PI - float(gammaln(0.5 * dim + 1.0))


def volume_ball(dim: int) -> float:
    """Unit ball in R^dim."""
    return _exp(log_volume_ball(dim))


def log_volume_sphere(d: int) -> float:
    _positive("d", d)
    return math.log(d + 1) + log_volume_ball(d + 1)


def volume_sphere(d: int) -> float:
    """Unit sphere S^d ⊂ R^{d+1}."""
    return _exp(log_volume_sphere(d))


def log_volume_sphere_asymptotic(d: int) -> float:
    _positive("d", d)
    return 0.5 * math.log(2.0) + 0.5 * d * math.log(2.0 * math.pi * math.e) - 0.5 * d * math.log(d)


def volume_sphere_asymptotic(d: int) -> float:
    """Stirling form √2·(2πe)^{d/2}·d^{-d/2}."""
    return _exp(log_volume_sphere_asymptotic(d))


def log_volume_projective(m: int) -> float:
    _positive("m", m, minimum=2)
    return math.log(2 * m - 1) + 0.5 * (2 * m - 3) * LOG_PI - math.log(2.0) - float(gammaln(m + 1.0))


def volume_projective(m: int) -> float:
    """(2m-1)·π^{(2m-3)/2}/(2·m!) for pure states of an m-level system."""
    return _exp(log_volume_projective(m))


def volume_projective_printed_quotient(m: int) -> float:
    """(2m-1)·π^{(2m-1)/2}/Γ(m+1) divided by 2π, evaluated term by term."""
    _positive("m", m, minimum=2)
    log_value = math.log(2 * m - 1) + 0.5 * (2 * m - 1) * LOG_PI - float(gammaln(m + 1.0)) - LOG_TWO_PI
    return _exp(log_value)


def _check_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"volume ratio needs odd n >= 3 so both spaces carry n-1 parameters, got {n}")


def log_volume_ratio(n: int) -> float:
    _check_odd(n)
    return log_volume_equimodular(n) - log_volume_projective(1 + (n - 1) // 2)


def volume_ratio(n: int) -> float:
    """Equimodular torus over the projective space with the same number of parameters."""
    return _exp(log_volume_ratio(n))


def volume_ratio_asymptotic_base() -> float:
    """Per-parameter growth factor 2π/√(2πe) of the volume ratio."""
    return 2.0 * math.pi / math.sqrt(2.0 * math.pi * math.e)


def log_volume_ratio_sphere(n: int) -> float:
    _positive("n", n, minimum=2)
    return log_volume_equimodular(n) - log_volume_sphere(n - 1)


def volume_ratio_sphere(n: int) -> float:
    """Equimodular torus T_n over the sphere S^{n-1} of the same dimension."""
    return _exp(log_volume_ratio_sphere(n))


def volume_report(space: VolumeSpace | str, n: int, evaluation: Evaluation | str = Evaluation.EXACT) -> VolumeReport:
    space = VolumeSpace(space)
    evaluation = Evaluation(evaluation)
    if evaluation is Evaluation.ASYMPTOTIC and space is not VolumeSpace.SPHERE:
        raise ValueError("only the sphere volume has an asymptotic form")
    log_of = {
        VolumeSpace.TORUS: log_volume_equimodular,
        VolumeSpace.BALL: log_volume_ball,
        VolumeSpace.SPHERE: log_volume_sphere_asymptotic if evaluation is Evaluation.ASYMPTOTIC else log_volume_sphere,
        VolumeSpace.PROJECTIVE: log_volume_projective,
    }[space]
    log_value = log_of(n)
    return VolumeReport(n=n, space=space, volume=_exp(log_value), log_volume=log_value, evaluation=evaluation)
