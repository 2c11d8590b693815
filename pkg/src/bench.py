from __future__ import annotations

import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Sequence

import numpy as np
import pandas as pd

from .config import StrategyConfig
from .digraph import decompose
from .errors import ScpError
from .generators import generate
from .solver import solve
from .utils.timeutils import median_seconds

# Fixed CSV layout; documented in docs/RUNNING.md.
BENCH_COLUMNS = ["family", "n", "d", "k", "s", "strategy", "seconds"]
FIT_COLUMNS = ["family", "slope", "points"]


@dataclass(frozen=True)
class BenchRecord:
    family: str
    n: int
    d: int
    k: int  # component count of tuple a
    s: int  # largest component size of tuple a
    strategy: str
    seconds: float  # median over reps


def bench_point(
    family: str,
    n: int,
    d: int,
    reps: int,
    strategy: StrategyConfig,
    seed: int = 0,
    s: int = 64,
    k: int = 2,
) -> BenchRecord:
    instance = generate(family, n, d, seed=seed, s=s, k=k)
    a, b = instance.a, instance.b
    assert b is not None
    dec = decompose(a)
    seconds = median_seconds(lambda: solve(a, b, strategy), reps)
    return BenchRecord(
        family=family,
        n=n,
        d=d,
        k=dec.k,
        s=max(len(m) for m in dec.members),
        strategy=strategy.mode,
        seconds=seconds,
    )


def run_bench(
    families: Sequence[str],
    grids: Dict[str, List[int]],
    reps: int,
    d: int,
    strategy: StrategyConfig,
    seed: int = 0,
    s: int = 64,
    k: int = 2,
) -> List[BenchRecord]:
    records: List[BenchRecord] = []
    for family in families:
        grid = grids.get(family, [])
        print(f"[bench] {family}: {len(grid)} sizes, reps={reps}", file=sys.stderr, flush=True)
        for n in grid:
            try:
                rec = bench_point(family, n, d, reps, strategy, seed=seed, s=s, k=k)
            except ScpError as exc:
                print(f"[bench] skipping {family} n={n}: {exc}", file=sys.stderr)
                continue
            print(
                f"[bench] {family} n={n} k={rec.k} s={rec.s} -> {rec.seconds:.4f}s",
                file=sys.stderr,
                flush=True,
            )
            records.append(rec)
    return records


def records_frame(records: Iterable[BenchRecord]) -> pd.DataFrame:
    rows = [asdict(r) for r in records]
    return pd.DataFrame(rows, columns=BENCH_COLUMNS)


def fit_exponents(frame: pd.DataFrame) -> pd.DataFrame:
    """
    Least-squares slope of log(seconds) against log(n), per family.
    Families with fewer than two usable sizes are left out.
    """
    fits = []
    usable = frame[frame["seconds"] > 0]
    for family, group in usable.groupby("family", sort=False):
        if group["n"].nunique() < 2:
            continue
        slope, _ = np.polyfit(np.log(group["n"].astype(float)), np.log(group["seconds"].astype(float)), 1)
        fits.append({"family": family, "slope": float(slope), "points": int(len(group))})
    return pd.DataFrame(fits, columns=FIT_COLUMNS)


def write_frame(frame: pd.DataFrame, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
