"""CSV formats for count records and fringe scans."""

from __future__ import annotations

from pathlib import Path

import pandas as pd

from src.utils.output import atomic_write_text

from .types import CountRecord, FringeScan, MeasurementSetting, Polarization, SpatialMode

COUNT_COLUMNS = ["outcome", "pol", "spatial", "counts", "shots"]
FRINGE_COLUMNS = ["angle_deg", "p_Hh", "p_Dr", "p_Dl"]
FLOAT_FORMAT = "%.10g"


def count_records_frame(records: list[CountRecord]) -> pd.DataFrame:
    rows = [
        {
            "outcome": r.alice_outcome,
            "pol": r.setting.polarization.value,
            "spatial": r.setting.spatial.value,
            "counts": r.counts,
            "shots": r.shots,
        }
        for r in records
    ]
    return pd.DataFrame(rows, columns=COUNT_COLUMNS)


def records_from_frame(df: pd.DataFrame) -> list[CountRecord]:
    missing = [c for c in COUNT_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError(f"count file is missing columns: {', '.join(missing)}")
    return [
        CountRecord(
            alice_outcome=int(row.outcome),
            setting=MeasurementSetting(polarization=Polarization(row.pol), spatial=SpatialMode(row.spatial)),
            counts=float(row.counts),
            shots=float(row.shots),
        )
        for row in df.itertuples(index=False)
    ]


def write_count_records(records: list[CountRecord], path: str | Path) -> Path:
    csv = count_records_frame(records).to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return atomic_write_text(path, csv)


def read_count_records(path: str | Path) -> list[CountRecord]:
    df = pd.read_csv(path, dtype={"pol": str, "spatial": str}, keep_default_na=False)
    return records_from_frame(df)


def fringe_scan_frame(scan: FringeScan) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "angle_deg": scan.angles_deg,
            "p_Hh": scan.p_hh,
            "p_Dr": scan.p_dr,
            "p_Dl": scan.p_dl,
        },
        columns=FRINGE_COLUMNS,
    )
