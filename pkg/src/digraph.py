from __future__ import annotations

from collections import deque
from typing import Dict, Iterator, List, Tuple

from .models import Arc, ComponentDecomposition, Permutation, PermTuple
from .perms import inverse


def arcs(a: PermTuple) -> Iterator[Arc]:
    """Materialize the arcs of G_a on demand, colour-major."""
    for k, p in enumerate(a.perms):
        for i, x in enumerate(p.images):
            yield Arc(ini=i, ter=x, color=k)


def _orbits(a: PermTuple) -> Tuple[List[int], List[List[int]]]:
    """
    BFS over arcs in both directions. Returns comp_of and, per component,
    its vertices in ascending order. Components are numbered by their
    smallest vertex.
    """
    n = a.n
    forward = [p.images for p in a.perms]
    backward = [inverse(p).images for p in a.perms]
    comp_of = [-1] * n
    members: List[List[int]] = []

    for start in range(n):
        if comp_of[start] != -1:
            continue
        cid = len(members)
        comp_of[start] = cid
        found = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for images in forward:
                w = images[u]
                if comp_of[w] == -1:
                    comp_of[w] = cid
                    found.append(w)
                    queue.append(w)
            for images in backward:
                w = images[u]
                if comp_of[w] == -1:
                    comp_of[w] = cid
                    found.append(w)
                    queue.append(w)
        found.sort()
        members.append(found)

    return comp_of, members


def is_transitive(a: PermTuple) -> bool:
    _, members = _orbits(a)
    return len(members) == 1


def decompose(a: PermTuple) -> ComponentDecomposition:
    """
    Split G_a into connected components. Local vertex numbering follows
    ascending global id; every a_j restricted to a component is a
    permutation of it. O(d n).
    """
    comp_of, members = _orbits(a)

    local_index = [0] * a.n
    for verts in members:
        for i, v in enumerate(verts):
            local_index[v] = i

    local_tuples: List[PermTuple] = []
    size_classes: Dict[int, List[int]] = {}
    for cid, verts in enumerate(members):
        perms = tuple(
            Permutation(tuple(local_index[p.images[v]] for v in verts))
            for p in a.perms
        )
        local_tuples.append(PermTuple(perms))
        size_classes.setdefault(len(verts), []).append(cid)

    return ComponentDecomposition(
        n=a.n,
        comp_of=tuple(comp_of),
        members=tuple(tuple(v) for v in members),
        local_tuples=tuple(local_tuples),
        size_classes=dict(sorted(size_classes.items())),
    )


def size_multiset(dec: ComponentDecomposition) -> List[Tuple[int, int]]:
    """Sorted (n_i, p_i) pairs: component size and its multiplicity."""
    return [(size, len(ids)) for size, ids in sorted(dec.size_classes.items())]


def embed(dec: ComponentDecomposition) -> PermTuple:
    """Inverse of decompose: push every local tuple back to global labels."""
    d = dec.local_tuples[0].d
    images = [[0] * dec.n for _ in range(d)]
    for verts, local in zip(dec.members, dec.local_tuples):
        for k, p in enumerate(local.perms):
            row = images[k]
            for i, x in enumerate(p.images):
                row[verts[i]] = verts[x]
    return PermTuple(tuple(Permutation(tuple(row)) for row in images))
