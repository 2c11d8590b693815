from __future__ import annotations

from statistics import median
from time import perf_counter
from typing import Callable, List, Tuple, TypeVar

T = TypeVar("T")


def timed(func: Callable[[], T]) -> Tuple[T, float]:
    """Run func once; return its result and elapsed wall seconds (monotonic clock)."""
    start = perf_counter()
    result = func()
    return result, perf_counter() - start


def median_seconds(func: Callable[[], object], reps: int) -> float:
    if reps < 1:
        raise ValueError("reps must be >= 1")
    samples: List[float] = []
    for _ in range(reps):
        _, seconds = timed(func)
        samples.append(seconds)
    return median(samples)
