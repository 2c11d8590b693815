from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Literal, Optional

from dotenv import load_dotenv

from .errors import ScpError
from .utils.expr import compile_threshold


# Base directory of the project (one level above src/)
BASE_DIR = Path(__file__).resolve().parent.parent

Mode = Literal["auto", "label", "pairwise"]
MODES = ("auto", "label", "pairwise")

DEFAULT_THRESHOLD = "n / max(1, floor(log2(n)))"


# ---------- Solver configuration ----------


@dataclass(frozen=True)
class StrategyConfig:
    """
    How solve() treats each size class.

    auto: classes with n_i >= large_threshold(n) use pairwise propagation,
    the rest use canonical labels.
    """

    mode: Mode = "auto"
    threshold_expr: str = DEFAULT_THRESHOLD
    workers: int = 1
    large_threshold: Callable[[int], float] = field(
        default=compile_threshold(DEFAULT_THRESHOLD), compare=False, repr=False
    )

    @classmethod
    def build(cls, mode: str = "auto", threshold_expr: str = DEFAULT_THRESHOLD, workers: int = 1) -> "StrategyConfig":
        if mode not in MODES:
            raise ScpError(f"unknown strategy {mode!r}; expected one of {', '.join(MODES)}")
        if workers < 1:
            raise ScpError("workers must be >= 1")
        return cls(
            mode=mode,  # type: ignore[arg-type]
            threshold_expr=threshold_expr,
            workers=workers,
            large_threshold=compile_threshold(threshold_expr),
        )

    def is_large(self, size: int, n: int) -> bool:
        return size >= self.large_threshold(n)


@dataclass
class SolverConfig:
    mode: str = "auto"
    threshold_expr: str = DEFAULT_THRESHOLD
    workers: int = 1

    def strategy(self) -> StrategyConfig:
        return StrategyConfig.build(self.mode, self.threshold_expr, self.workers)


# ---------- Oracle configuration ----------


@dataclass
class OracleConfig:
    # Brute force walks all n! permutations; 8! = 40320 is still quick.
    max_n: int = 8


# ---------- Instance generation ----------


@dataclass
class GeneratorConfig:
    seed: int = 0
    block_size: int = 8  # s for equal-components / mixed
    large_count: int = 2  # k for few-large


# ---------- Benchmark configuration ----------


@dataclass
class BenchConfig:
    """
    Defaults for the scaling experiments.

    equal-components with fixed s should fit a slope near 1,
    connected (one component) a slope near 2.
    """

    families: List[str] = field(default_factory=lambda: ["equal-components", "connected"])
    grids: Dict[str, List[int]] = field(
        default_factory=lambda: {
            "equal-components": [2**e for e in range(10, 17)],
            "connected": [2**e for e in range(8, 13)],
            "few-large": [2**e for e in range(8, 12)],
            "mixed": [2**e for e in range(8, 13)],
            "random": [2**e for e in range(8, 13)],
            "conjugate-pair": [2**e for e in range(8, 13)],
        }
    )
    reps: int = 5
    d: int = 3
    block_size: int = 64


# ---------- Paths configuration ----------


@dataclass
class PathsConfig:
    """
    Central place for file paths used by the benchmark runner.
    """

    data_dir: Path = BASE_DIR / "data"

    bench_csv_path: Path = data_dir / "bench.csv"
    bench_fits_path: Path = data_dir / "bench_fits.csv"

    def relocate(self, data_dir: Path) -> "PathsConfig":
        return PathsConfig(
            data_dir=data_dir,
            bench_csv_path=data_dir / self.bench_csv_path.name,
            bench_fits_path=data_dir / self.bench_fits_path.name,
        )


# ---------- Top-level application configuration ----------


@dataclass
class AppConfig:
    solver: SolverConfig = field(default_factory=SolverConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    generator: GeneratorConfig = field(default_factory=GeneratorConfig)
    bench: BenchConfig = field(default_factory=BenchConfig)
    paths: PathsConfig = field(default_factory=PathsConfig)


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise ScpError(f"{name} must be an integer, got {raw!r}") from exc


def get_config() -> AppConfig:
    """
    Main entrypoint to get the full application config.

    Values come from the dataclass defaults, then a .env file / the
    environment (SCP_* variables). CLI flags override on top of this.

    Usage:
        from src.config import get_config
        cfg = get_config()
        cfg.solver.strategy()
    """
    load_dotenv()
    cfg = AppConfig()

    cfg.solver.mode = os.getenv("SCP_STRATEGY", cfg.solver.mode)
    cfg.solver.threshold_expr = os.getenv("SCP_THRESHOLD", cfg.solver.threshold_expr)

    workers = _env_int("SCP_WORKERS")
    if workers is not None:
        cfg.solver.workers = workers
    max_n = _env_int("SCP_ORACLE_MAX_N")
    if max_n is not None:
        cfg.oracle.max_n = max_n
    reps = _env_int("SCP_BENCH_REPS")
    if reps is not None:
        cfg.bench.reps = reps
    seed = _env_int("SCP_SEED")
    if seed is not None:
        cfg.generator.seed = seed

    data_dir = os.getenv("SCP_DATA_DIR")
    if data_dir:
        cfg.paths = cfg.paths.relocate(Path(data_dir))

    # Ensure data directory exists
    cfg.paths.data_dir.mkdir(parents=True, exist_ok=True)

    return cfg
