from __future__ import annotations

import json
from typing import Any, Iterable

import numpy as np

from .types import ProtocolTranscript


def transcript_record(t: ProtocolTranscript) -> dict[str, Any]:
    """Flat JSON-ready record of a transcript."""
    amplitudes = t.target.amplitudes
    relative = np.degrees(np.angle(amplitudes[1:] * np.conj(amplitudes[0]))) % 360.0
    return {
        "protocol": t.protocol.value,
        "phases_deg": [round(float(x), 10) for x in relative],
        "outcome": t.alice_outcome,
        "outcome_label": t.outcome_label,
        "bits": t.classical_bits,
        "fidelity": round(t.fidelity, 12),
        "succeeded": t.succeeded,
    }


def transcripts_jsonl(transcripts: Iterable[ProtocolTranscript]) -> str:
    return "".join(json.dumps(transcript_record(t)) + "\n" for t in transcripts)
