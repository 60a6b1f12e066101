"""Maximum-likelihood state reconstruction with a Cholesky parameterization.

ρ = T†T / tr(T†T) with T lower-triangular, so every iterate is a valid density
matrix. The d² real parameters are the d real diagonal entries of T followed by
(Re, Im) pairs of the strictly-lower entries in ``np.tril_indices`` order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from src.expsim import CountRecord, setting_projector
from src.qcore import DensityMatrix

from .types import (
    EmptyCountsError,
    InsufficientSettingsError,
    Likelihood,
    ReconstructionResult,
)

logger = logging.getLogger(__name__)

P_FLOOR = 1e-12
OBJECTIVE_TOL = 1e-10
STEP_TOL = 1e-8
GRADIENT_TOL = 1e-8
MAX_ITERATIONS = 10_000


def params_to_t(params: np.ndarray, dim: int) -> np.ndarray:
    t = np.zeros((dim, dim), dtype=complex)
    t[np.diag_indices(dim)] = params[:dim]
    rows, cols = np.tril_indices(dim, k=-1)
    pairs = np.asarray(params[dim:], dtype=float).reshape(-1, 2)
    t[rows, cols] = pairs[:, 0] + 1j * pairs[:, 1]
    return t


def t_to_params(t: np.ndarray) -> np.ndarray:
    dim = t.shape[0]
    rows, cols = np.tril_indices(dim, k=-1)
    lower = t[rows, cols]
    pairs = np.column_stack([lower.real, lower.imag]).reshape(-1)
    return np.concatenate([np.diag(t).real, pairs])


def rho_from_params(params: np.ndarray, dim: int) -> np.ndarray:
    t = params_to_t(params, dim)
    a = t.conj().T @ t
    return a / np.trace(a).real


def initial_params(dim: int) -> np.ndarray:
    """T = I/2, the maximally mixed state."""
    return t_to_params(np.eye(dim, dtype=complex) / 2.0)


@dataclass(frozen=True)
class CountObjective:
    projectors: np.ndarray  # (n, d, d)
    counts: np.ndarray
    shots: np.ndarray
    likelihood: Likelihood = Likelihood.GAUSSIAN

    @property
    def dim(self) -> int:
        return int(self.projectors.shape[1])

    def probabilities(self, rho: np.ndarray) -> np.ndarray:
        return np.einsum("sij,ji->s", self.projectors, rho).real

    def _terms(self, p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Objective terms and their derivatives with respect to p."""
        n, shots = self.counts, self.shots
        p = np.maximum(p, P_FLOOR)
        expected = shots * p
        if self.likelihood is Likelihood.GAUSSIAN:
            terms = (expected - n) ** 2 / (2.0 * expected)
            dterms = shots / 2.0 - n**2 / (2.0 * shots * p**2)
        else:
            safe_n = np.where(n > 0, n, 1.0)
            terms = expected - n - np.where(n > 0, n * np.log(expected / safe_n), 0.0)
            dterms = shots - n / p
        return terms, dterms

    def value(self, params: np.ndarray) -> float:
        p = self.probabilities(rho_from_params(params, self.dim))
        return float(np.sum(self._terms(p)[0]))

    def value_and_grad(self, params: np.ndarray) -> tuple[float, np.ndarray]:
        dim = self.dim
        t = params_to_t(params, dim)
        a = t.conj().T @ t
        trace = np.trace(a).real
        rho = a / trace
        p = self.probabilities(rho)
        terms, dterms = self._terms(p)
        # clamped probabilities are constant, so they carry no gradient
        dterms = np.where(p > P_FLOOR, dterms, 0.0)

        g = (np.einsum("s,sij->ij", dterms, self.projectors) - np.dot(dterms, p) * np.eye(dim)) / trace
        m = g @ t.conj().T
        grad_t = 2.0 * m.T  # d/d(Re T_ij) = 2 Re M_ji, d/d(Im T_ij) = -2 Im M_ji
        rows, cols = np.tril_indices(dim, k=-1)
        lower = grad_t[rows, cols]
        grad = np.concatenate(
            [np.diag(grad_t).real, np.column_stack([lower.real, -lower.imag]).reshape(-1)]
        )
        return float(np.sum(terms)), grad


def build_objective(
    records: list[CountRecord],
    likelihood: Likelihood | str = Likelihood.GAUSSIAN,
    dim: int = 4,
) -> CountObjective:
    """Validate one outcome's records and assemble the fit objective."""
    if not records:
        raise InsufficientSettingsError("no count records given")
    outcomes = {r.alice_outcome for r in records}
    if len(outcomes) > 1:
        raise ValueError(f"records mix Alice outcomes {sorted(outcomes)}; fit one outcome at a time")
    used = [r for r in records if r.shots > 0]
    if not used or sum(r.counts for r in used) <= 0:
        raise EmptyCountsError(f"all counts are zero for Alice outcome {records[0].alice_outcome}")

    projectors = np.stack([setting_projector(r.setting) for r in used])
    if projectors.shape[1] != dim:
        raise ValueError(f"settings act on dimension {projectors.shape[1]}, expected {dim}")
    real_span = np.concatenate(
        [projectors.real.reshape(len(used), -1), projectors.imag.reshape(len(used), -1)], axis=1
    )
    rank = np.linalg.matrix_rank(real_span)
    if rank < dim * dim:
        raise InsufficientSettingsError(f"settings span {rank} of {dim * dim} required dimensions")

    return CountObjective(
        projectors=projectors,
        counts=np.array([r.counts for r in used], dtype=float),
        shots=np.array([r.shots for r in used], dtype=float),
        likelihood=Likelihood(likelihood),
    )


def mle_reconstruct(
    records: list[CountRecord],
    *,
    likelihood: Likelihood | str = Likelihood.GAUSSIAN,
    max_iterations: int = MAX_ITERATIONS,
) -> ReconstructionResult:
    """Fit ρ to one Alice outcome's coincidence records.

    Non-convergence is not an error: the best iterate is returned with
    ``converged=False``.
    """
    objective = build_objective(records, likelihood)
    x0 = initial_params(objective.dim)
    history = [objective.value(x0)]
    iterates = [x0]

    def track(xk: np.ndarray) -> None:
        iterates.append(np.array(xk, copy=True))
        history.append(objective.value(xk))

    result = minimize(
        objective.value_and_grad,
        x0,
        jac=True,
        method="L-BFGS-B",
        callback=track,
        options={"maxiter": max_iterations, "ftol": OBJECTIVE_TOL, "gtol": GRADIENT_TOL},
    )

    small_steps = (
        len(iterates) >= 2
        and np.linalg.norm(iterates[-1] - iterates[-2]) < STEP_TOL
        and abs(history[-1] - history[-2]) < OBJECTIVE_TOL * max(1.0, abs(history[-1]))
    )
    converged = bool(result.success) or small_steps
    if result.nit >= max_iterations:
        logger.warning(f"MLE hit the iteration cap ({max_iterations}); returning best iterate")
    elif not converged:
        logger.debug(f"MLE stopped without meeting tolerances: {result.message}")

    rho = DensityMatrix.from_operator(rho_from_params(result.x, objective.dim))
    logger.debug(f"MLE outcome {records[0].alice_outcome}: f={result.fun:.6g} nit={result.nit}")
    return ReconstructionResult(
        rho=rho,
        neg_log_likelihood=float(result.fun),
        iterations=int(result.nit),
        converged=converged,
        history=tuple(history),
    )
