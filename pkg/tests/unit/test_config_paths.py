from __future__ import annotations

import pytest

from src.config import get_config
from src.errors import ScpError


def test_get_config_creates_data_dir_and_paths_are_under_it(tmp_path, monkeypatch):
    """
    get_config() should ensure data_dir exists, and the benchmark outputs
    should live under that directory.
    """
    monkeypatch.setenv("SCP_DATA_DIR", str(tmp_path / "data"))
    cfg = get_config()

    data_dir = cfg.paths.data_dir
    assert data_dir.exists()
    assert data_dir.is_dir()

    assert str(cfg.paths.bench_csv_path).startswith(str(data_dir))
    assert str(cfg.paths.bench_fits_path).startswith(str(data_dir))


def test_defaults(tmp_path, monkeypatch):
    monkeypatch.setenv("SCP_DATA_DIR", str(tmp_path))
    for name in ("SCP_STRATEGY", "SCP_THRESHOLD", "SCP_WORKERS", "SCP_ORACLE_MAX_N", "SCP_BENCH_REPS", "SCP_SEED"):
        monkeypatch.delenv(name, raising=False)
    cfg = get_config()

    assert cfg.solver.strategy().mode == "auto"
    assert cfg.oracle.max_n == 8
    assert cfg.bench.reps == 5
    assert cfg.bench.grids["equal-components"][0] == 2**10
    assert cfg.bench.grids["equal-components"][-1] == 2**16


def test_environment_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv("SCP_DATA_DIR", str(tmp_path))
    monkeypatch.setenv("SCP_STRATEGY", "pairwise")
    monkeypatch.setenv("SCP_THRESHOLD", "n / 2")
    monkeypatch.setenv("SCP_BENCH_REPS", "3")
    monkeypatch.setenv("SCP_ORACLE_MAX_N", "6")
    cfg = get_config()

    strategy = cfg.solver.strategy()
    assert strategy.mode == "pairwise"
    assert strategy.large_threshold(10) == 5.0
    assert cfg.bench.reps == 3
    assert cfg.oracle.max_n == 6


def test_bad_integer_environment_value(tmp_path, monkeypatch):
    monkeypatch.setenv("SCP_DATA_DIR", str(tmp_path))
    monkeypatch.setenv("SCP_WORKERS", "many")
    with pytest.raises(ScpError):
        get_config()
