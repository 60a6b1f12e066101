"""Subcommand implementations: each turns a RunConfig into a CommandResult."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np
import pandas as pd

from src.cli.types import REGION_DEFAULT_SAMPLES, PhaseConvention, RunConfig, TargetSpec
from src.expsim import angle_grid, fringe_scan, fringe_scan_frame, read_count_records, simulate_counts
from src.infogeo import (
    classical_fidelity_equimodular,
    classical_fidelity_general,
    log_entropy_number_bound,
    log_volume_ratio,
    mc_classical_fidelity_equimodular,
    qutrit_outcome_region_fraction,
    sudakov_packing_bounds,
    volume_equimodular,
    volume_projective,
    volume_ratio,
)
from src.protocols import (
    EquimodularPhases,
    ExperimentalPhases,
    correction_table,
    equimodular_state,
    phase_map,
    resource_table,
)
from src.tomography import (
    density_matrix_payload,
    reconstruct_pipeline,
    report_frame,
    report_row,
)
from src.utils.display import format_table
from src.utils.progress import progress

FLOAT_FORMAT = "%.10g"


@dataclass
class CommandResult:
    table: pd.DataFrame
    payload: Any = None
    metadata: dict[str, Any] = field(default_factory=dict)


def render(result: CommandResult, fmt: str, *, color: bool = False) -> str:
    if fmt == "csv":
        return result.table.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    if fmt == "table":
        return format_table(result.table, color=color)
    payload = result.payload
    if payload is None:
        payload = json.loads(result.table.to_json(orient="records", double_precision=12))
    if result.metadata:
        payload = {**result.metadata, "rows": payload}
    return json.dumps(payload, indent=2) + "\n"


def spawn_generators(seed: int | None, count: int) -> list[np.random.Generator | None]:
    """Independent per-item streams; ``None`` everywhere when no seed is configured."""
    if seed is None:
        return [None] * count
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(count)]


def resolve_target(entry: TargetSpec) -> EquimodularPhases:
    if entry.convention is PhaseConvention.EXPERIMENTAL:
        return phase_map(ExperimentalPhases.from_degrees(*entry.phases_deg))
    return EquimodularPhases.from_degrees(entry.phases_deg)


def cmd_simulate(config: RunConfig, *, show_progress: bool = False) -> CommandResult:
    corrections = correction_table(config.basis)
    rows = []
    matrices = []
    streams = spawn_generators(None if config.analytic else config.seed, len(config.targets))
    progress.reset()
    if show_progress:
        progress.start()
    try:
        for entry, rng in zip(config.targets, streams):
            phases = resolve_target(entry)
            progress.update_status(entry.label, "simulating counts")
            records = simulate_counts(
                phases, config.noise, config.shots, rng, analytic=config.analytic, basis=config.basis
            )

            def on_outcome(k: int, label: str = entry.label) -> None:
                progress.update_status(label, "reconstructing", f"outcome {k + 1}/{len(corrections)}")

            result = reconstruct_pipeline(
                records,
                corrections,
                target=equimodular_state(phases),
                likelihood=config.likelihood,
                on_outcome=on_outcome,
            )
            target_deg = entry.phases_deg if entry.convention is PhaseConvention.CANONICAL else phases.degrees
            row = report_row(target_deg, result.estimate, result.fidelity, label=entry.label)
            rows.append(row)
            matrices.append({"label": entry.label, **density_matrix_payload(result.rho)})
            progress.update_status(entry.label, "done", f"{row.fidelity_pct:.1f}%")
    finally:
        progress.stop()

    frame = report_frame(rows)
    payload = [{**r.as_record(), "row": r.text, "density_matrix": m} for r, m in zip(rows, matrices)]
    return CommandResult(table=frame, payload=payload, metadata={"weighting": "outcome_probability"})


def cmd_tomo(config: RunConfig) -> CommandResult:
    records = read_count_records(config.counts_path)
    target = None
    if config.target_deg is not None:
        target = equimodular_state(EquimodularPhases.from_degrees(config.target_deg))
    result = reconstruct_pipeline(records, correction_table(config.basis), target=target, likelihood=config.likelihood)
    shown_target = config.target_deg if config.target_deg is not None else result.estimate.degrees
    row = report_row(shown_target, result.estimate, result.fidelity, label="counts")
    payload = {
        **density_matrix_payload(result.rho, **result.metadata),
        "weights": list(result.weights),
        "measured_phases_deg": list(row.measured_deg),
        "fidelity_pct": row.fidelity_pct,
    }
    return CommandResult(table=report_frame([row]), payload=payload)


def _fidelity_table(config: RunConfig) -> pd.DataFrame:
    streams = spawn_generators(config.seed if config.samples > 0 else None, len(config.dims))
    rows = []
    for d, rng in zip(config.dims, streams):
        row: dict[str, Any] = {
            "d": d,
            "N": d - 1,
            "F_general": classical_fidelity_general(d),
            "F_equimodular": classical_fidelity_equimodular(d),
            "mc_estimate": math.nan,
            "mc_stderr": math.nan,
        }
        if config.samples > 0:
            mc = mc_classical_fidelity_equimodular(d, config.samples, rng)
            row["mc_estimate"] = mc.estimate
            row["mc_stderr"] = mc.standard_error
        rows.append(row)
    return pd.DataFrame(rows)


def _volume_table(config: RunConfig) -> pd.DataFrame:
    rows = [
        {
            "n": n,
            "vol_torus": volume_equimodular(n),
            "vol_projective": volume_projective(1 + (n - 1) // 2),
            "ratio": volume_ratio(n),
            "log_ratio": log_volume_ratio(n),
        }
        for n in range(3, config.n_max + 1, 2)
    ]
    return pd.DataFrame(rows)


def _packing_table(config: RunConfig) -> pd.DataFrame:
    rows = []
    for n in range(1, config.n_max + 1):
        bounds = sudakov_packing_bounds(n, config.packing_c)
        rows.append(
            {
                "n": n,
                "C": bounds.C,
                "delta_threshold": bounds.delta_threshold,
                "lower_log2": bounds.lower_log2,
                "upper_ln": bounds.upper_ln,
                "entropy_log2": log_entropy_number_bound(n, bounds.delta, base=2.0),
            }
        )
    return pd.DataFrame(rows)


BOUNDS_TABLES: dict[str, Callable[[RunConfig], pd.DataFrame]] = {
    "fidelity": _fidelity_table,
    "volumes": _volume_table,
    "packing": _packing_table,
}


def cmd_bounds(config: RunConfig) -> CommandResult:
    return CommandResult(table=BOUNDS_TABLES[config.table](config))


def cmd_fringes(config: RunConfig) -> CommandResult:
    fixed = ExperimentalPhases.from_degrees(*config.fixed_deg)
    angles = angle_grid(config.angles.start, config.angles.stop, config.angles.step)
    scan = fringe_scan(config.vary, fixed, angles, config.noise, basis=config.basis)
    return CommandResult(table=fringe_scan_frame(scan), metadata={"varied": scan.varied.value})


def cmd_region(config: RunConfig) -> CommandResult:
    samples = config.samples or REGION_DEFAULT_SAMPLES
    rng = np.random.default_rng(config.seed)
    estimate = qutrit_outcome_region_fraction(samples, config.resolution, rng)
    frame = pd.DataFrame(
        [
            {
                "fraction": estimate.fraction,
                "standard_error": estimate.standard_error,
                "samples": estimate.samples,
                "resolution": estimate.resolution,
            }
        ]
    )
    return CommandResult(table=frame)


def cmd_resources(config: RunConfig) -> CommandResult:
    rows = [
        {
            "N": n,
            "protocol": profile.protocol.value,
            "state_dim": profile.state_dim,
            "success_probability": profile.success_probability,
            "classical_bits": profile.classical_bits,
            "alice_detectors": profile.alice_detectors,
            "bob_transformations": profile.bob_transformations,
            "charles_knowledge": profile.charles_knowledge.value,
        }
        for n in config.resource_n
        for profile in resource_table(n)
    ]
    return CommandResult(table=pd.DataFrame(rows))


COMMAND_HANDLERS: dict[str, Callable[[RunConfig], CommandResult]] = {
    "tomo": cmd_tomo,
    "bounds": cmd_bounds,
    "fringes": cmd_fringes,
    "region": cmd_region,
    "resources": cmd_resources,
}


def run_command(config: RunConfig, *, show_progress: bool = False) -> CommandResult:
    if config.command == "simulate":
        return cmd_simulate(config, show_progress=show_progress)
    return COMMAND_HANDLERS[config.command](config)
