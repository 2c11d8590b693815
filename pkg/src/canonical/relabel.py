from __future__ import annotations

from collections import deque
from typing import List, Sequence, Tuple

from ..errors import DimensionMismatchError, NotTransitiveError
from ..models import Code, Permutation, PermTuple, RelabelResult


def bfs_order(rows: Sequence[Sequence[int]], n: int, v: int) -> Tuple[List[int], List[int]]:
    """
    Breadth-first relabeling from v, out-neighbours taken in ascending colour.

    Returns (order, gamma): order[new] = old and gamma[old] = new.
    Stops when the queue empties; raises NotTransitiveError if some vertex
    was never reached.
    """
    gamma = [-1] * n
    gamma[v] = 0
    order = [v]
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for images in rows:
            w = images[u]
            if gamma[w] == -1:
                gamma[w] = len(order)
                order.append(w)
                queue.append(w)
    if len(order) != n:
        raise NotTransitiveError(len(order), n)
    return order, gamma


def relabel(a: PermTuple, v: int) -> RelabelResult:
    """
    Relabel G_a in BFS order from v; the result is a^v = gamma^-1 a gamma
    with gamma(v) = first label. O(d n).
    """
    if not 0 <= v < a.n:
        raise DimensionMismatchError(f"start vertex {v + 1} outside 1..{a.n}")
    rows = [p.images for p in a.perms]
    order, gamma = bfs_order(rows, a.n, v)
    relabeled = tuple(
        Permutation(tuple(gamma[images[x]] for x in order)) for images in rows
    )
    return RelabelResult(gamma=Permutation(tuple(gamma)), relabeled=PermTuple(relabeled))


def code(a: PermTuple) -> Code:
    symbols: List[int] = []
    for p in a.perms:
        symbols.extend(p.images)
    return Code(tuple(symbols))
