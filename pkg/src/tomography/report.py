from __future__ import annotations

from typing import Sequence

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from .types import PhaseEstimate

REPORT_COLUMNS = [
    "label",
    "target_phi1_deg",
    "target_phi2_deg",
    "target_phi3_deg",
    "measured_phi1_deg",
    "measured_phi2_deg",
    "measured_phi3_deg",
    "fidelity_pct",
]


def _measured(angle_deg: float) -> float:
    # 359.96 rounds to 360.0; report it as 0.0
    return round(angle_deg, 1) % 360.0


class ReportRow(BaseModel):
    """Target phases, measured phases, fidelity; formatted like the experiment summary table."""

    model_config = ConfigDict(frozen=True)

    label: str = ""
    target_deg: tuple[float, ...]
    measured_deg: tuple[float, ...]
    fidelity_pct: float = Field(ge=0.0, le=100.0)

    @property
    def text(self) -> str:
        targets = ", ".join(f"{x:g}" for x in self.target_deg)
        measured = ", ".join(f"{x:.1f}" for x in self.measured_deg)
        return f"{targets} | {measured} | {self.fidelity_pct:.1f}"

    def as_record(self) -> dict[str, object]:
        record: dict[str, object] = {"label": self.label}
        for i, x in enumerate(self.target_deg, start=1):
            record[f"target_phi{i}_deg"] = x
        for i, x in enumerate(self.measured_deg, start=1):
            record[f"measured_phi{i}_deg"] = x
        record["fidelity_pct"] = self.fidelity_pct
        return record


def report_row(
    target_deg: Sequence[float],
    estimate: PhaseEstimate,
    fidelity: float,
    label: str = "",
) -> ReportRow:
    return ReportRow(
        label=label,
        target_deg=tuple(float(x) for x in target_deg),
        measured_deg=tuple(_measured(x) for x in estimate.degrees),
        fidelity_pct=round(100.0 * fidelity, 1),
    )


def report_frame(rows: Sequence[ReportRow]) -> pd.DataFrame:
    return pd.DataFrame([r.as_record() for r in rows], columns=REPORT_COLUMNS)
