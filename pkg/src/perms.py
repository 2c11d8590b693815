from __future__ import annotations

from typing import Iterable, List, Sequence

from .errors import DimensionMismatchError, InvalidPermutationError
from .models import Permutation, PermTuple

# Action convention: permutations act on the right and multiply left to
# right, so i^(gh) = (i^g)^h and conjugation is t^-1 a t.


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def permutation_from_images(images: Iterable[int], validate: bool = True) -> Permutation:
    """
    Build a Permutation from 0-based images.

    validate=False is for values produced by this package; anything read
    from outside must be validated (O(n)).
    """
    imgs = tuple(images)
    if validate:
        seen = [False] * len(imgs)
        for i, x in enumerate(imgs):
            if not isinstance(x, int) or not 0 <= x < len(imgs) or seen[x]:
                raise InvalidPermutationError(
                    f"not a permutation of 1..{len(imgs)}: position {i + 1} has {x!r}"
                )
            seen[x] = True
    return Permutation(imgs)


def make_tuple(perms: Sequence[Permutation]) -> PermTuple:
    if not perms:
        raise DimensionMismatchError("a tuple needs d >= 1 permutations")
    n = perms[0].n
    if n < 1:
        raise DimensionMismatchError("ground set must have n >= 1")
    for j, p in enumerate(perms):
        if p.n != n:
            raise DimensionMismatchError(
                f"permutation {j + 1} acts on {p.n} points, expected {n}"
            )
    return PermTuple(tuple(perms))


def identity_tuple(n: int, d: int) -> PermTuple:
    return make_tuple([identity(n)] * d)


def apply(g: Permutation, i: int) -> int:
    if not 0 <= i < g.n:
        raise DimensionMismatchError(f"vertex {i + 1} outside 1..{g.n}")
    return g.images[i]


def _same_n(g: Permutation, h: Permutation) -> None:
    if g.n != h.n:
        raise DimensionMismatchError(f"permutations on {g.n} and {h.n} points")


def compose(g: Permutation, h: Permutation) -> Permutation:
    """g then h: result[i] = h[g[i]]."""
    _same_n(g, h)
    hi = h.images
    return Permutation(tuple(hi[x] for x in g.images))


def inverse(g: Permutation) -> Permutation:
    inv = [0] * g.n
    for i, x in enumerate(g.images):
        inv[x] = i
    return Permutation(tuple(inv))


def _conjugate_images(a: Sequence[int], t: Sequence[int]) -> List[int]:
    # (t^-1 a t): t[x] -> t[a[x]]
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[t[x]] = t[y]
    return out


def conjugate(g: Permutation, t: Permutation) -> Permutation:
    _same_n(g, t)
    return Permutation(tuple(_conjugate_images(g.images, t.images)))


def conjugate_tuple(a: PermTuple, t: Permutation) -> PermTuple:
    if a.n != t.n:
        raise DimensionMismatchError(f"tuple on {a.n} points, conjugator on {t.n}")
    ti = t.images
    return PermTuple(
        tuple(Permutation(tuple(_conjugate_images(p.images, ti))) for p in a.perms)
    )


def check_dimensions(a: PermTuple, b: PermTuple) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"tuples on {a.n} and {b.n} points")
    if a.d != b.d:
        raise DimensionMismatchError(f"tuples of degree {a.d} and {b.d}")


def verify_conjugacy(a: PermTuple, b: PermTuple, t: Permutation) -> bool:
    """True iff b_j = t^-1 a_j t for every j. O(d n), no allocation per colour."""
    check_dimensions(a, b)
    if t.n != a.n:
        raise DimensionMismatchError(f"tuples on {a.n} points, conjugator on {t.n}")
    ti = t.images
    for pa, pb in zip(a.perms, b.perms):
        bi = pb.images
        for x, y in enumerate(pa.images):
            if bi[ti[x]] != ti[y]:
                return False
    return True


def cycles(g: Permutation) -> List[List[int]]:
    seen = [False] * g.n
    out: List[List[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = g.images[x]
        out.append(cyc)
    return out
