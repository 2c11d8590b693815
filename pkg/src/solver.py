from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from .canonical import extract_conjugator, label_tuples, labeled_components
from .config import StrategyConfig
from .digraph import decompose, size_multiset
from .errors import DimensionMismatchError, NotTransitiveError, VerificationError
from .models import (
    ComponentDecomposition,
    LabeledComponent,
    Permutation,
    PermTuple,
    ScpResult,
    ScpStats,
    SizeClassStats,
    StrategyName,
)
from .perms import check_dimensions, verify_conjugacy
from .utils.timeutils import timed

__all__ = ["StrategyConfig", "match_components", "pairwise_iso", "solve"]


# ---------------------------------------------------------------------------
# Pairwise propagation
# ---------------------------------------------------------------------------


def _propagate(rows_a: Sequence[Sequence[int]], rows_b: Sequence[Sequence[int]], m: int, w: int) -> Optional[List[int]]:
    """
    Grow the unique colour-preserving map with phi(0) = w. None on conflict.
    """
    phi = [-1] * m
    used = [False] * m
    phi[0] = w
    used[w] = True
    mapped = 1
    queue = deque([0])
    while queue:
        x = queue.popleft()
        fx = phi[x]
        for ra, rb in zip(rows_a, rows_b):
            y = ra[x]
            fy = rb[fx]
            if phi[y] == -1:
                if used[fy]:
                    return None
                phi[y] = fy
                used[fy] = True
                mapped += 1
                queue.append(y)
            elif phi[y] != fy:
                return None
    if mapped != m:
        raise NotTransitiveError(mapped, m)
    return phi


def pairwise_iso(ha: PermTuple, hb: PermTuple) -> Optional[Permutation]:
    """
    Colour-isomorphism between two connected tuples, or None.

    An isomorphism is fixed by the image of one vertex, so try every image w
    of vertex 0 and propagate; O(d m) per candidate, O(d m^2) total.
    """
    if ha.n != hb.n or ha.d != hb.d:
        raise DimensionMismatchError(
            f"components of size/degree {ha.n}/{ha.d} and {hb.n}/{hb.d}"
        )
    rows_a = [p.images for p in ha.perms]
    rows_b = [p.images for p in hb.perms]
    for w in range(ha.n):
        phi = _propagate(rows_a, rows_b, ha.n, w)
        if phi is not None:
            return Permutation(tuple(phi))
    return None


# ---------------------------------------------------------------------------
# Label matching
# ---------------------------------------------------------------------------


def _match_key(c: LabeledComponent) -> Tuple[int, Tuple[int, ...], int]:
    return (c.size, c.label.label.symbols, c.first_vertex)


def match_components(
    labels_a: Sequence[LabeledComponent],
    labels_b: Sequence[LabeledComponent],
) -> Optional[List[Tuple[LabeledComponent, LabeledComponent]]]:
    """
    Pair components with equal (size, label). None unless the two multisets
    agree with multiplicity. Both sides are sorted by
    (size, label, smallest global vertex) and zipped, so the pairing is
    deterministic.
    """
    if len(labels_a) != len(labels_b):
        return None
    side_a = sorted(labels_a, key=_match_key)
    side_b = sorted(labels_b, key=_match_key)
    pairs: List[Tuple[LabeledComponent, LabeledComponent]] = []
    for ca, cb in zip(side_a, side_b):
        if ca.size != cb.size or ca.label.label != cb.label.label:
            return None
        pairs.append((ca, cb))
    return pairs


# ---------------------------------------------------------------------------
# Decision procedure
# ---------------------------------------------------------------------------


def _class_strategy(size: int, n: int, cfg: StrategyConfig) -> StrategyName:
    if cfg.mode == "label":
        return "label"
    if cfg.mode == "pairwise":
        return "pairwise"
    return "pairwise" if cfg.is_large(size, n) else "label"


def _match_pairwise(
    dec_a: ComponentDecomposition,
    dec_b: ComponentDecomposition,
    ids_a: Sequence[int],
    ids_b: Sequence[int],
) -> Optional[List[Tuple[int, int, Permutation]]]:
    # Colour-isomorphism is an equivalence relation, so a greedy first match
    # never blocks a later component.
    remaining = list(ids_b)
    matched: List[Tuple[int, int, Permutation]] = []
    for ca in ids_a:
        for pos, cb in enumerate(remaining):
            phi = pairwise_iso(dec_a.local_tuples[ca], dec_b.local_tuples[cb])
            if phi is not None:
                matched.append((ca, cb, phi))
                del remaining[pos]
                break
        else:
            return None
    return matched


def _assemble(
    n: int,
    dec_a: ComponentDecomposition,
    dec_b: ComponentDecomposition,
    local: Sequence[Tuple[int, int, Permutation]],
) -> Permutation:
    tau = [-1] * n
    for ca, cb, phi in local:
        verts_a = dec_a.members[ca]
        verts_b = dec_b.members[cb]
        for x, y in enumerate(phi.images):
            tau[verts_a[x]] = verts_b[y]
    return Permutation(tuple(tau))


def solve(a: PermTuple, b: PermTuple, cfg: Optional[StrategyConfig] = None) -> ScpResult:
    """
    Decide whether some tau gives b_j = tau^-1 a_j tau for all j.

    1. Component size multisets must agree.
    2. Each size class is matched by canonical labels or by pairwise
       propagation (per cfg).
    3. Local witnesses are glued into a global tau, which is verified
       before it is returned.
    """
    check_dimensions(a, b)
    cfg = cfg or StrategyConfig()
    stats = ScpStats()
    n = a.n

    (dec_a, dec_b), stats.seconds["decompose"] = timed(lambda: (decompose(a), decompose(b)))
    stats.sizes_a = size_multiset(dec_a)
    stats.sizes_b = size_multiset(dec_b)
    if stats.sizes_a != stats.sizes_b:
        return ScpResult(conjugate=False, stats=stats)

    strategies: Dict[int, StrategyName] = {}
    for size, ids in dec_a.size_classes.items():
        strategies[size] = _class_strategy(size, n, cfg)
        stats.classes.append(SizeClassStats(size=size, count=len(ids), strategy=strategies[size]))

    def match() -> Optional[List[Tuple[int, int, Permutation]]]:
        label_sizes = [s for s, st in strategies.items() if st == "label"]
        ids_a = [cid for s in label_sizes for cid in dec_a.size_classes[s]]
        ids_b = [cid for s in label_sizes for cid in dec_b.size_classes[s]]
        # One batch for both sides keeps a single process pool per solve.
        labels = label_tuples(
            [dec_a.local_tuples[c] for c in ids_a] + [dec_b.local_tuples[c] for c in ids_b],
            cfg.workers,
        )
        labeled_a = labeled_components(dec_a, ids_a, labels[: len(ids_a)])
        labeled_b = labeled_components(dec_b, ids_b, labels[len(ids_a):])

        local: List[Tuple[int, int, Permutation]] = []
        pairs = match_components(labeled_a, labeled_b)
        if pairs is None:
            return None
        for ca, cb in pairs:
            local.append((ca.component, cb.component, extract_conjugator(ca.label, cb.label)))

        for size, strategy in strategies.items():
            if strategy != "pairwise":
                continue
            found = _match_pairwise(dec_a, dec_b, dec_a.size_classes[size], dec_b.size_classes[size])
            if found is None:
                return None
            local.extend(found)
        return local

    local, stats.seconds["match"] = timed(match)
    if local is None:
        return ScpResult(conjugate=False, stats=stats)

    witness = _assemble(n, dec_a, dec_b, local)
    ok, stats.seconds["verify"] = timed(lambda: verify_conjugacy(a, b, witness))
    if not ok:
        raise VerificationError("assembled conjugator failed verification")
    return ScpResult(conjugate=True, witness=witness, stats=stats)
