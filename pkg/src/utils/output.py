from __future__ import annotations

import logging
import os
from pathlib import Path

logger = logging.getLogger(__name__)

PARTIAL_SUFFIX = ".partial"


def resolve_output_path(out: str | Path, output_dir: str | None = None) -> Path:
    """Relative paths land under ``output_dir`` when one is configured."""
    path = Path(out)
    if output_dir and not path.is_absolute():
        return Path(output_dir) / path
    return path


def atomic_write_text(path: str | Path, text: str) -> Path:
    """Write to a ``.partial`` sibling then rename; the partial file never survives a failure."""
    target = Path(path)
    partial = target.with_name(target.name + PARTIAL_SUFFIX)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(partial, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(partial, target)
    except BaseException:
        partial.unlink(missing_ok=True)
        raise
    logger.info(f"Wrote {target}")
    return target
