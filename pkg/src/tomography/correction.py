from __future__ import annotations

import logging
from collections import defaultdict
from typing import Mapping, Sequence

import numpy as np

from src.expsim import CountRecord
from src.qcore import DensityMatrix, UnitaryOp, apply_unitary
from src.qcore.errors import check_dims

logger = logging.getLogger(__name__)


def group_by_outcome(records: Sequence[CountRecord]) -> dict[int, list[CountRecord]]:
    grouped: dict[int, list[CountRecord]] = defaultdict(list)
    for record in records:
        grouped[record.alice_outcome].append(record)
    return dict(sorted(grouped.items()))


def outcome_weights(records_by_outcome: Mapping[int, Sequence[CountRecord]]) -> tuple[float, ...]:
    """Heralding-probability estimates: each outcome's share of all heralded shots."""
    totals = np.array([sum(r.shots for r in records) for _, records in sorted(records_by_outcome.items())])
    grand_total = totals.sum()
    if grand_total <= 0:
        raise ValueError("no heralded shots in any outcome")
    return tuple(float(x) for x in totals / grand_total)


def correct_and_average(
    rhos: Sequence[DensityMatrix],
    corrections: Sequence[UnitaryOp],
    weights: Sequence[float] | None = None,
) -> DensityMatrix:
    """Σ_k w_k U_k ρ_k U_k† with weights normalized to sum to 1 (uniform when omitted)."""
    if len(rhos) != len(corrections):
        raise ValueError(f"{len(rhos)} density matrices but {len(corrections)} corrections")
    if not rhos:
        raise ValueError("nothing to average")
    w = np.full(len(rhos), 1.0 / len(rhos)) if weights is None else np.asarray(weights, dtype=float)
    if w.shape != (len(rhos),) or np.any(w < 0) or w.sum() <= 0:
        raise ValueError("weights must be one nonnegative value per outcome with a positive sum")
    w = w / w.sum()

    dim = rhos[0].dim
    total = np.zeros((dim, dim), dtype=complex)
    for weight, rho, u in zip(w, rhos, corrections):
        check_dims(dim, rho.dim)
        total += weight * apply_unitary(u, rho).entries
    return DensityMatrix.from_operator(total)
