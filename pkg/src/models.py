from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Tuple

# Vertices are 0-based internally. Conversion to the 1-based notation used in
# files and printed output lives in instances.py / label rendering only.


@dataclass(frozen=True)
class Permutation:
    """
    A bijection on {0..n-1} stored as its image sequence: images[i] = i^g.

    Construction does not validate; untrusted input goes through
    perms.permutation_from_images().
    """

    images: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)


@dataclass(frozen=True)
class PermTuple:
    """
    Ordered d-tuple of permutations on a common ground set.

    This is also the permutation digraph G_a: vertex i has an arc of colour k
    to i^{a_k}. Arcs are derived, never stored.
    """

    perms: Tuple[Permutation, ...]

    @property
    def n(self) -> int:
        return self.perms[0].n

    @property
    def d(self) -> int:
        return len(self.perms)


@dataclass(frozen=True)
class Arc:
    ini: int
    ter: int
    color: int  # 0-based colour index


@dataclass(frozen=True)
class ComponentDecomposition:
    """
    Partition of the vertex set into connected components.

    members[c] lists the global vertices of component c in ascending order;
    local vertex i of component c is members[c][i].
    """

    n: int
    comp_of: Tuple[int, ...]
    members: Tuple[Tuple[int, ...], ...]
    local_tuples: Tuple[PermTuple, ...]
    size_classes: Dict[int, List[int]] = field(hash=False)

    @property
    def k(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class RelabelResult:
    gamma: Permutation  # old label -> new label
    relabeled: PermTuple


@dataclass(frozen=True, order=True)
class Code:
    """
    Concatenated image rows of a tuple, colour 1 first.

    Ordering is positionwise on the integer symbols.
    """

    symbols: Tuple[int, ...]

    def one_based(self) -> Tuple[int, ...]:
        return tuple(s + 1 for s in self.symbols)


@dataclass(frozen=True)
class ConnectedLabel:
    label: Code
    best_vertex: int
    gamma: Permutation
    # Tuple the label was computed for; needed to verify extracted witnesses.
    source: PermTuple = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return self.gamma.n


@dataclass(frozen=True)
class LabeledComponent:
    component: int
    size: int
    first_vertex: int  # smallest global vertex of the component
    label: ConnectedLabel


@dataclass(frozen=True)
class GraphLabel:
    """
    Canonical label of a whole permutation digraph.

    parts are (size, code) pairs sorted ascending; equality of two
    GraphLabels is equality of the serialized integer sequences.
    """

    d: int
    parts: Tuple[Tuple[int, Code], ...]

    def serialize(self) -> Tuple[int, ...]:
        out: List[int] = []
        for size, code in self.parts:
            out.append(size)
            out.append(self.d)
            out.extend(code.one_based())
        return tuple(out)


StrategyName = Literal["label", "pairwise"]


@dataclass(frozen=True)
class SizeClassStats:
    size: int
    count: int  # p_i, components of this size on each side
    strategy: StrategyName


@dataclass
class ScpStats:
    sizes_a: List[Tuple[int, int]] = field(default_factory=list)
    sizes_b: List[Tuple[int, int]] = field(default_factory=list)
    classes: List[SizeClassStats] = field(default_factory=list)
    seconds: Dict[str, float] = field(default_factory=dict)


@dataclass
class ScpResult:
    """
    Outcome of one d-SCP decision.

    conjugate implies witness is set and verified.
    """

    conjugate: bool
    witness: Optional[Permutation] = None
    stats: ScpStats = field(default_factory=ScpStats)
