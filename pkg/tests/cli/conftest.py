import json

import pytest


@pytest.fixture()
def single_target_config(tmp_path):
    path = tmp_path / "targets.json"
    path.write_text(json.dumps({"targets": [{"label": "a", "phases_deg": [112, 180, 278]}]}), encoding="utf-8")
    return path


@pytest.fixture(autouse=True)
def _no_output_dir(monkeypatch):
    monkeypatch.delenv("SDT_OUTPUT_DIR", raising=False)
    monkeypatch.delenv("SDT_LOG_LEVEL", raising=False)
