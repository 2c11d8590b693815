from __future__ import annotations

from itertools import permutations
from typing import List, Optional

from .errors import NotTransitiveError, OracleLimitError
from .models import Code, Permutation, PermTuple
from .perms import check_dimensions, conjugate_tuple, verify_conjugacy

# Reference answers for tests. Nothing here may reuse the optimized code
# paths beyond perms.py, or the cross-checks stop meaning anything.

DEFAULT_MAX_N = 8


def brute_force_scp(a: PermTuple, b: PermTuple, max_n: int = DEFAULT_MAX_N) -> Optional[Permutation]:
    """First tau in lexicographic order with b = tau^-1 a tau, or None."""
    check_dimensions(a, b)
    if a.n > max_n:
        raise OracleLimitError(f"brute force capped at n={max_n}, got n={a.n}")
    for images in permutations(range(a.n)):
        tau = Permutation(images)
        if verify_conjugacy(a, b, tau):
            return tau
    return None


def _naive_relabeling(a: PermTuple, v: int) -> Permutation:
    labels = {v: 0}
    frontier = [v]
    while frontier:
        nxt: List[int] = []
        for u in frontier:
            for p in a.perms:
                w = p.images[u]
                if w not in labels:
                    labels[w] = len(labels)
                    nxt.append(w)
        frontier = nxt
    if len(labels) != a.n:
        raise NotTransitiveError(len(labels), a.n)
    return Permutation(tuple(labels[i] for i in range(a.n)))


def brute_force_connected_label(a: PermTuple) -> Code:
    """Minimum code over every start vertex, each computed from scratch."""
    codes = []
    for v in range(a.n):
        relabeled = conjugate_tuple(a, _naive_relabeling(a, v))
        codes.append(tuple(x for p in relabeled.perms for x in p.images))
    return Code(min(codes))
