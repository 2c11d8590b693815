from __future__ import annotations

import pytest


@pytest.fixture(autouse=True)
def isolated_env(tmp_path, monkeypatch):
    """Keep runners away from the repo data/ dir and SCP_* overrides."""
    monkeypatch.setenv("SCP_DATA_DIR", str(tmp_path / "data"))
    for name in ("SCP_STRATEGY", "SCP_THRESHOLD", "SCP_WORKERS", "SCP_ORACLE_MAX_N", "SCP_BENCH_REPS", "SCP_SEED"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
