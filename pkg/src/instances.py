from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import InstanceFormatError, ScpError
from .models import Code, GraphLabel, Permutation, PermTuple
from .perms import make_tuple, permutation_from_images

# Text formats are 1-based, as in the usual notation; everything inside the
# package is 0-based. This module is the only place that converts.


@dataclass(frozen=True)
class InstanceFile:
    """
    Header "n d", then d rows for tuple a and (unless label-only) d rows for
    tuple b. Row j lists the images of 1..n under a_j.
    """

    a: PermTuple
    b: Optional[PermTuple] = None

    @property
    def n(self) -> int:
        return self.a.n

    @property
    def d(self) -> int:
        return self.a.d


# ---------------------------------------------------------------------------
# Tuples <-> 1-based rows
# ---------------------------------------------------------------------------


def tuple_from_rows(rows: Sequence[Sequence[int]]) -> PermTuple:
    """Validated PermTuple from 1-based image rows, e.g. [[2, 3, 1]]."""
    return make_tuple([permutation_from_images(x - 1 for x in row) for row in rows])


def perm_from_one_based(images: Iterable[int]) -> Permutation:
    return permutation_from_images(x - 1 for x in images)


def perm_to_one_based(g: Permutation) -> Tuple[int, ...]:
    return tuple(x + 1 for x in g.images)


def tuple_to_rows(a: PermTuple) -> List[Tuple[int, ...]]:
    return [perm_to_one_based(p) for p in a.perms]


# ---------------------------------------------------------------------------
# Instance files
# ---------------------------------------------------------------------------


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """(1-based line number, stripped content); blanks and # comments dropped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


_UINT_RE = re.compile(r"[0-9]+")


def _ints(line: str, lineno: int, source: str) -> List[int]:
    # ASCII digits only: int() also takes "1_0", "+3" and non-Latin digits.
    tokens = line.split()
    for tok in tokens:
        if not _UINT_RE.fullmatch(tok):
            raise InstanceFormatError(f"expected unsigned integers, got {tok!r}", lineno, source)
    return [int(tok) for tok in tokens]


def _eof_line(text: str) -> int:
    """Line number just past the last line; where missing rows are reported."""
    return len(text.splitlines()) + 1


def parse_instance(text: str, source: str = "<input>", require_b: bool = False) -> InstanceFile:
    lines = _content_lines(text)
    if not lines:
        raise InstanceFormatError("empty instance; expected header 'n d'", _eof_line(text), source)

    lineno, header = lines[0]
    values = _ints(header, lineno, source)
    if len(values) != 2:
        raise InstanceFormatError("header must be 'n d'", lineno, source)
    n, d = values
    if n < 1 or d < 1:
        raise InstanceFormatError(f"need n >= 1 and d >= 1, got n={n} d={d}", lineno, source)

    body = lines[1:]
    if len(body) > 2 * d:
        raise InstanceFormatError(
            f"expected at most {2 * d} permutation rows after the header, found {len(body)}",
            body[2 * d][0],
            source,
        )
    if len(body) < d or (d < len(body) < 2 * d):
        raise InstanceFormatError(
            f"expected {d} or {2 * d} permutation rows after the header, found {len(body)}",
            _eof_line(text),
            source,
        )
    if require_b and len(body) != 2 * d:
        raise InstanceFormatError(
            f"instance has only tuple a; {2 * d} rows needed to solve", _eof_line(text), source
        )

    perms: List[Permutation] = []
    for lineno, line in body:
        row = _ints(line, lineno, source)
        if len(row) != n:
            raise InstanceFormatError(f"row has {len(row)} entries, expected {n}", lineno, source)
        try:
            perms.append(perm_from_one_based(row))
        except ScpError as exc:
            raise InstanceFormatError(str(exc), lineno, source) from None

    a = make_tuple(perms[:d])
    b = make_tuple(perms[d:]) if len(perms) == 2 * d else None
    return InstanceFile(a=a, b=b)


def render_instance(instance: InstanceFile) -> str:
    lines = [f"{instance.n} {instance.d}"]
    for tup in (instance.a, instance.b):
        if tup is None:
            continue
        lines.extend(" ".join(map(str, row)) for row in tuple_to_rows(tup))
    return "\n".join(lines) + "\n"


def read_instance(path: Path, require_b: bool = False) -> InstanceFile:
    with path.open("r", encoding="utf-8") as f:
        return parse_instance(f.read(), source=str(path), require_b=require_b)


def write_instance(instance: InstanceFile, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write(render_instance(instance))


# ---------------------------------------------------------------------------
# Solve output / witnesses
# ---------------------------------------------------------------------------


def render_solution(witness: Optional[Permutation]) -> str:
    if witness is None:
        return "NO\n"
    return "YES\n" + " ".join(map(str, perm_to_one_based(witness))) + "\n"


def parse_witness(text: str, n: int, source: str = "<witness>") -> Optional[Permutation]:
    """
    Accepts solve output ("YES" + images / "NO") or a bare line of images.
    Returns None for "NO".
    """
    lines = _content_lines(text)
    if not lines:
        raise InstanceFormatError("empty witness", _eof_line(text), source)
    lineno, first = lines[0]
    if first.upper() == "NO":
        return None
    if first.upper() == "YES":
        if len(lines) < 2:
            raise InstanceFormatError("YES without witness line", lineno, source)
        lineno, first = lines[1]
    row = _ints(first, lineno, source)
    if len(row) != n:
        raise InstanceFormatError(f"witness has {len(row)} entries, expected {n}", lineno, source)
    try:
        return perm_from_one_based(row)
    except ScpError as exc:
        raise InstanceFormatError(str(exc), lineno, source) from None


# ---------------------------------------------------------------------------
# Graph labels
# ---------------------------------------------------------------------------

_PART_RE = re.compile(r"\[([0-9]+):\(([0-9]+(?:,[0-9]+)*)\)\]")


def render_graph_label(label: GraphLabel) -> str:
    """[n_i:(s_1,...,s_{d n_i})] per part, symbols 1-based."""
    return "".join(
        f"[{size}:({','.join(map(str, code.one_based()))})]" for size, code in label.parts
    )


def parse_graph_label(text: str) -> GraphLabel:
    text = text.strip()
    parts: List[Tuple[int, Code]] = []
    d: Optional[int] = None
    pos = 0
    while pos < len(text):
        m = _PART_RE.match(text, pos)
        if m is None:
            raise ScpError(f"malformed label at offset {pos}: {text[pos:pos + 20]!r}")
        size = int(m.group(1))
        symbols = tuple(int(s) - 1 for s in m.group(2).split(","))
        if size < 1 or not symbols or len(symbols) % size:
            raise ScpError(f"part of size {size} has {len(symbols)} symbols")
        part_d = len(symbols) // size
        identity_block = list(range(size))
        for j in range(part_d):
            if sorted(symbols[j * size:(j + 1) * size]) != identity_block:
                raise ScpError(f"colour {j + 1} of part [{size}:...] is not a permutation of 1..{size}")
        if d is None:
            d = part_d
        elif part_d != d:
            raise ScpError(f"mixed degrees in label: {d} and {part_d}")
        parts.append((size, Code(symbols)))
        pos = m.end()
    if d is None:
        raise ScpError("empty label")
    return GraphLabel(d=d, parts=tuple(parts))
