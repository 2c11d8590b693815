from __future__ import annotations

import random
from typing import List, Optional

from .errors import ScpError
from .instances import InstanceFile
from .models import Permutation, PermTuple
from .perms import conjugate_tuple

FAMILIES = ("random", "conjugate-pair", "equal-components", "few-large", "mixed", "connected")


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(tuple(images))


def _random_cycle(rng: random.Random, block: List[int], row: List[int]) -> None:
    # One |block|-cycle through the block in shuffled order.
    order = block[:]
    rng.shuffle(order)
    for i, v in enumerate(order):
        row[v] = order[(i + 1) % len(order)]


def _random_on_block(rng: random.Random, block: List[int], row: List[int]) -> None:
    targets = block[:]
    rng.shuffle(targets)
    for v, t in zip(block, targets):
        row[v] = t


def tuple_with_components(rng: random.Random, sizes: List[int], d: int) -> PermTuple:
    """
    Consecutive blocks of the given sizes, each forced into one component:
    colour 1 is a random cycle on the block, colours 2..d are uniform
    permutations of the block.
    """
    n = sum(sizes)
    rows = [[0] * n for _ in range(d)]
    start = 0
    for size in sizes:
        block = list(range(start, start + size))
        _random_cycle(rng, block, rows[0])
        for row in rows[1:]:
            _random_on_block(rng, block, row)
        start += size
    return PermTuple(tuple(Permutation(tuple(row)) for row in rows))


def random_tuple(rng: random.Random, n: int, d: int) -> PermTuple:
    return PermTuple(tuple(random_permutation(rng, n) for _ in range(d)))


def component_sizes(family: str, n: int, rng: random.Random, s: int, k: int) -> List[int]:
    if family == "equal-components":
        if s < 1 or n % s:
            raise ScpError(f"equal-components needs s | n, got n={n} s={s}")
        return [s] * (n // s)
    if family == "few-large":
        if k < 1 or n % k:
            raise ScpError(f"few-large needs k | n, got n={n} k={k}")
        return [n // k] * k
    if family == "connected":
        return [n]
    if family == "mixed":
        if s < 1:
            raise ScpError(f"mixed needs s >= 1, got s={s}")
        large = (n + 1) // 2
        sizes = [large]
        remaining = n - large
        while remaining:
            size = rng.randint(1, min(s, remaining))
            sizes.append(size)
            remaining -= size
        return sizes
    raise ScpError(f"family {family!r} has no component structure")


def generate(
    family: str,
    n: int,
    d: int,
    seed: int,
    s: int = 8,
    k: int = 2,
    independent: bool = False,
    label_only: bool = False,
) -> InstanceFile:
    """
    Deterministic instance for a family. Structured families conjugate a by a
    random sigma to get b unless independent is set, in which case b is a
    fresh draw with the same component sizes.
    """
    if family not in FAMILIES:
        raise ScpError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if n < 1 or d < 1:
        raise ScpError(f"need n >= 1 and d >= 1, got n={n} d={d}")

    rng = random.Random(seed)
    b: Optional[PermTuple]

    if family in ("random", "conjugate-pair"):
        a = random_tuple(rng, n, d)
        if label_only:
            b = None
        elif family == "random":
            b = random_tuple(rng, n, d)
        else:
            b = conjugate_tuple(a, random_permutation(rng, n))
        return InstanceFile(a=a, b=b)

    sizes = component_sizes(family, n, rng, s, k)
    a = tuple_with_components(rng, sizes, d)
    if label_only:
        b = None
    elif independent:
        b = conjugate_tuple(tuple_with_components(rng, sizes, d), random_permutation(rng, n))
    else:
        b = conjugate_tuple(a, random_permutation(rng, n))
    return InstanceFile(a=a, b=b)
