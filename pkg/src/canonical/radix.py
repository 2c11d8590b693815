from __future__ import annotations

from typing import List, Sequence


def radix_sort(keys: Sequence[Sequence[int]], alphabet_size: int) -> List[int]:
    """
    Stable LSD radix sort of equal-length integer keys over {0..alphabet_size-1}.

    Returns the sorted order as indices into keys, so callers can carry
    payloads along. One counting pass per key position:
    O(L * (alphabet_size + len(keys))).
    """
    order = list(range(len(keys)))
    if len(keys) < 2:
        return order

    length = len(keys[0])
    for key in keys:
        if len(key) != length:
            raise ValueError("radix_sort needs keys of equal length")

    for pos in range(length - 1, -1, -1):
        buckets: List[List[int]] = [[] for _ in range(alphabet_size)]
        for idx in order:
            buckets[keys[idx][pos]].append(idx)
        order = [idx for bucket in buckets for idx in bucket]

    return order
