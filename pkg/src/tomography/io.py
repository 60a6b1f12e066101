from __future__ import annotations

import json
from typing import Any

import numpy as np

from src.qcore import DensityMatrix


def density_matrix_payload(rho: DensityMatrix, **metadata: Any) -> dict[str, Any]:
    """Row-major [re, im] pairs plus free-form metadata."""
    entries = [[[float(z.real), float(z.imag)] for z in row] for row in rho.entries]
    return {"dim": rho.dim, "entries": entries, **metadata}


def density_matrix_json(rho: DensityMatrix, **metadata: Any) -> str:
    return json.dumps(density_matrix_payload(rho, **metadata), indent=2) + "\n"


def density_matrix_from_json(text: str) -> DensityMatrix:
    payload = json.loads(text)
    pairs = np.asarray(payload["entries"], dtype=float)
    if pairs.shape != (payload["dim"], payload["dim"], 2):
        raise ValueError(f"entries shape {pairs.shape} does not match dim {payload['dim']}")
    return DensityMatrix(entries=pairs[..., 0] + 1j * pairs[..., 1])
