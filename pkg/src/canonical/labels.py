from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from ..digraph import decompose
from ..errors import ScpError, VerificationError
from ..models import (
    Code,
    ComponentDecomposition,
    ConnectedLabel,
    GraphLabel,
    LabeledComponent,
    Permutation,
    PermTuple,
)
from ..perms import verify_conjugacy
from .radix import radix_sort
from .relabel import bfs_order


def canonical_label_connected(a: PermTuple) -> ConnectedLabel:
    """
    Minimum code over all BFS relabelings of a connected tuple.

    Every start vertex is tried (O(d n^2) overall). Only the running minimum
    and its witness are kept. Ties go to the smallest start vertex.
    """
    n = a.n
    rows = [p.images for p in a.perms]

    best: Optional[List[int]] = None
    best_vertex = 0
    best_gamma: List[int] = []

    for v in range(n):
        order, gamma = bfs_order(rows, n, v)

        # Build the code one colour block at a time and stop as soon as it
        # is known to be larger than the current minimum.
        candidate: List[int] = []
        smaller = best is None
        for images in rows:
            block = [gamma[images[x]] for x in order]
            if not smaller:
                start = len(candidate)
                current = best[start:start + n]  # type: ignore[index]
                if block > current:
                    break
                if block < current:
                    smaller = True
            candidate.extend(block)
        else:
            if smaller:
                best = candidate
                best_vertex = v
                best_gamma = gamma

    assert best is not None
    return ConnectedLabel(
        label=Code(tuple(best)),
        best_vertex=best_vertex,
        gamma=Permutation(tuple(best_gamma)),
        source=a,
    )


def extract_conjugator(la: ConnectedLabel, lb: ConnectedLabel) -> Permutation:
    """
    Witness from two equal labels: gamma_u followed by gamma_w^-1 takes
    a-vertices to canonical labels and on to b-vertices.
    """
    if la.size != lb.size or la.label != lb.label:
        raise ScpError("labels differ; the tuples are not conjugate")

    w_inv = [0] * lb.size
    for old, new in enumerate(lb.gamma.images):
        w_inv[new] = old
    tau = Permutation(tuple(w_inv[x] for x in la.gamma.images))

    if not verify_conjugacy(la.source, lb.source, tau):
        raise VerificationError("extracted conjugator does not conjugate the tuples")
    return tau


def label_tuples(tuples: Sequence[PermTuple], workers: int = 1) -> List[ConnectedLabel]:
    """
    Canonical label of every connected tuple, in input order.

    With workers > 1 the tuples are labeled in a process pool; map()
    keeps input order so the result does not depend on scheduling.
    """
    if workers <= 1 or len(tuples) < 2:
        return [canonical_label_connected(t) for t in tuples]

    chunksize = max(1, len(tuples) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(canonical_label_connected, tuples, chunksize=chunksize))


def label_components(dec: ComponentDecomposition, workers: int = 1) -> List[ConnectedLabel]:
    """Canonical label of every component, in component-id order."""
    return label_tuples(dec.local_tuples, workers)


def labeled_components(
    dec: ComponentDecomposition,
    ids: Sequence[int],
    labels: Sequence[ConnectedLabel],
) -> List[LabeledComponent]:
    """Attach size and smallest global vertex to the labels of components ids."""
    return [
        LabeledComponent(
            component=cid,
            size=len(dec.members[cid]),
            first_vertex=dec.members[cid][0],
            label=lab,
        )
        for cid, lab in zip(ids, labels)
    ]


def canonical_label_graph(a: PermTuple, workers: int = 1) -> GraphLabel:
    """
    Label of the whole digraph: component labels grouped by size (ascending),
    each size class ordered by radix sort on the label symbols.
    """
    dec = decompose(a)
    labels = label_components(dec, workers)

    parts: List[Tuple[int, Code]] = []
    for size, ids in dec.size_classes.items():
        codes = [labels[cid].label for cid in ids]
        for idx in radix_sort([c.symbols for c in codes], alphabet_size=size):
            parts.append((size, codes[idx]))

    return GraphLabel(d=a.d, parts=tuple(parts))
