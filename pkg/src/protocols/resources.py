"""Resource accounting for sending N real state parameters."""

from __future__ import annotations

import logging
import math

from .types import CharlesKnowledge, Protocol, ResourceProfile

logger = logging.getLogger(__name__)


def _rsp_dim(n_params: int) -> int:
    if n_params % 2:
        raise ValueError(f"RSP needs an even number of parameters (state dimension (N+2)/2), got N={n_params}")
    return (n_params + 2) // 2


def resource_profile(protocol: Protocol | str, n_params: int) -> ResourceProfile:
    """Resources needed by ``protocol`` to send ``n_params`` real state parameters.

    QT is only modelled for the qubit case (N=2). RSP rows require even N.
    """
    protocol = Protocol(protocol)
    if n_params < 1:
        raise ValueError(f"N must be >= 1, got {n_params}")

    if protocol is Protocol.SDT:
        dim = n_params + 1
        return ResourceProfile(
            protocol=protocol,
            n_params=n_params,
            state_dim=dim,
            success_probability=1.0,
            classical_bits=math.log2(dim),
            alice_detectors=dim,
            bob_transformations=dim,
            charles_knowledge=CharlesKnowledge.REQUIRED,
        )
    if protocol is Protocol.QT:
        if n_params != 2:
            raise ValueError("QT is only defined here for a qubit (N=2); qudit QT needs nonlinear optics")
        return ResourceProfile(
            protocol=protocol,
            n_params=2,
            state_dim=2,
            success_probability=0.5,
            classical_bits=2.0,
            alice_detectors=4,
            bob_transformations=4,
            charles_knowledge=CharlesKnowledge.OPTIONAL,
        )
    dim = _rsp_dim(n_params)
    if protocol is Protocol.RSP_PROB:
        return ResourceProfile(
            protocol=protocol,
            n_params=n_params,
            state_dim=dim,
            success_probability=2.0 / (n_params + 2),
            classical_bits=1.0,
            alice_detectors=1,
            bob_transformations=1,
            charles_knowledge=CharlesKnowledge.REQUIRED,
        )
    return ResourceProfile(
        protocol=protocol,
        n_params=n_params,
        state_dim=dim,
        success_probability=1.0,
        classical_bits=2.0 * math.log2(dim),
        alice_detectors=dim**2,
        bob_transformations=dim**2,
        charles_knowledge=CharlesKnowledge.REQUIRED,
    )


def classical_bit_ratio(n_params: int | float) -> float:
    """Deterministic-RSP bits over SDT bits, 2·log2((N+2)/2)/log2(N+1)."""
    if n_params < 1:
        raise ValueError("N must be >= 1")
    return 2.0 * math.log2((n_params + 2) / 2) / math.log2(n_params + 1)


def resource_table(n_params: int) -> list[ResourceProfile]:
    """Every protocol row defined for ``n_params``; undefined cells are skipped."""
    rows: list[ResourceProfile] = []
    for protocol in Protocol:
        try:
            rows.append(resource_profile(protocol, n_params))
        except ValueError as exc:
            logger.warning(f"Skipping {protocol.value} at N={n_params}: {exc}")
    return rows
