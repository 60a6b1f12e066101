from __future__ import annotations

import argparse
import json
from pathlib import Path
from typing import Any

from src.cli.types import RunConfig

COMMANDS = {
    "simulate": "Run the full SDT pipeline for each target and emit summary-table rows",
    "tomo": "Reconstruct Bob's state from a counts file",
    "bounds": "Classical fidelity limits, state-space volumes or packing bounds",
    "fringes": "Fringe scan of the three diagnostic probabilities over one experimental phase",
    "region": "Monte Carlo share of the qutrit outcome region",
    "resources": "Per-protocol resources for sending N state parameters",
}

# argparse dest -> nested config key path
NOISE_FLAGS = {
    "noise_crosstalk_a": ("noise", "spatial_crosstalk_alice"),
    "noise_crosstalk_b": ("noise", "spatial_crosstalk_bob"),
    "noise_depolarizing": ("noise", "depolarizing"),
}


def parse_float_list(arg: str | None) -> list[float]:
    if not arg:
        return []
    return [float(x.strip()) for x in arg.split(",") if x.strip()]


def parse_int_list(arg: str | None) -> list[int]:
    if not arg:
        return []
    return [int(x.strip()) for x in arg.split(",") if x.strip()]


def parse_angles(arg: str) -> dict[str, float]:
    """'start:stop:step' in degrees."""
    parts = arg.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected start:stop:step, got {arg!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"non-numeric angle grid {arg!r}") from exc
    return {"start": start, "stop": stop, "step": step}


def _degree_triple(arg: str) -> list[float]:
    values = parse_float_list(arg)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated angles in degrees, got {arg!r}")
    return values


def add_common_args(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("--config", type=str, help="JSON file with run parameters (flags override it)")
    parser.add_argument("--show-config", action="store_true", help="Print the merged configuration and exit")
    parser.add_argument("--seed", type=int, help="Seed for every random stream of the run")
    parser.add_argument("--out", type=str, help="Output file (default: stdout); relative paths honour SDT_OUTPUT_DIR")
    parser.add_argument("--format", type=str, choices=["csv", "json", "table"], help="Output format. Defaults to csv")
    parser.add_argument("--verbose", action="store_true", default=None, help="Debug logging on stderr")
    return parser


def add_noise_args(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("--noise-crosstalk-a", type=float, help="Spatial-mode crosstalk on Alice's photon, in [0,1]")
    parser.add_argument("--noise-crosstalk-b", type=float, help="Spatial-mode crosstalk on Bob's photon, in [0,1]")
    parser.add_argument("--noise-depolarizing", type=float, help="Depolarizing strength, in [0,1]")
    return parser


def add_basis_arg(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("--basis", type=str, choices=["spin_orbit", "fourier"], help="Alice's measurement basis")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sdt", description="SuperDense Teleportation simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = add_basis_arg(add_noise_args(add_common_args(sub.add_parser("simulate", help=COMMANDS["simulate"]))))
    simulate.add_argument("--shots", type=int, help="Pair trials per tomography setting. Defaults to 10000")
    simulate.add_argument("--analytic", action="store_true", default=None, help="Expected counts instead of samples")
    simulate.add_argument("--likelihood", type=str, choices=["gaussian", "poisson"], help="MLE objective")

    tomo = add_basis_arg(add_common_args(sub.add_parser("tomo", help=COMMANDS["tomo"])))
    tomo.add_argument("--counts", dest="counts_path", type=str, help="CSV with outcome,pol,spatial,counts,shots")
    tomo.add_argument("--target-deg", type=_degree_triple, help="Target phases phi1,phi2,phi3 in degrees")
    tomo.add_argument("--likelihood", type=str, choices=["gaussian", "poisson"], help="MLE objective")

    bounds = add_common_args(sub.add_parser("bounds", help=COMMANDS["bounds"]))
    bounds.add_argument("--table", type=str, choices=["fidelity", "volumes", "packing"], help="Which table to emit")
    bounds.add_argument("--dims", type=parse_int_list, help="Comma-separated dimensions for the fidelity table")
    bounds.add_argument("--samples", type=int, help="Monte Carlo samples per dimension (0 disables)")
    bounds.add_argument("--n-max", type=int, help="Largest n for the volume and packing tables")
    bounds.add_argument("--packing-c", type=float, help="Geometry constant C of the packing bounds")

    fringes = add_basis_arg(add_noise_args(add_common_args(sub.add_parser("fringes", help=COMMANDS["fringes"]))))
    fringes.add_argument("--vary", type=str, choices=["phi_a", "phi_b", "phi_c"], help="Experimental phase to sweep")
    fringes.add_argument("--fixed-deg", type=_degree_triple, help="phi_a,phi_b,phi_c in degrees (varied one ignored)")
    fringes.add_argument("--angles", type=parse_angles, help="Sweep grid start:stop:step in degrees")

    region = add_common_args(sub.add_parser("region", help=COMMANDS["region"]))
    region.add_argument("--samples", type=int, help="Monte Carlo samples. Defaults to 1000000")
    region.add_argument("--resolution", type=int, help="Cells per grid axis. Defaults to 200")

    resources = add_common_args(sub.add_parser("resources", help=COMMANDS["resources"]))
    resources.add_argument("--n", dest="resource_n", type=parse_int_list, help="Comma-separated parameter counts N")

    return parser


def load_config_file(path: str | Path) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must hold a JSON object")
    return data


def merge_args(data: dict[str, Any], args: argparse.Namespace) -> dict[str, Any]:
    """Overlay explicitly given flags onto ``data``."""
    merged = {**data, "noise": dict(data.get("noise", {}))}
    skip = {"config", "show_config"}
    for dest, value in vars(args).items():
        if value is None or dest in skip:
            continue
        if dest in NOISE_FLAGS:
            section, key = NOISE_FLAGS[dest]
            merged[section][key] = value
        else:
            merged[dest] = value
    return merged


def load_run_config(args: argparse.Namespace) -> RunConfig:
    data = load_config_file(args.config) if getattr(args, "config", None) else {}
    data.pop("command", None)
    return RunConfig.model_validate(merge_args(data, args))
