from __future__ import annotations

from typing import Optional


class ScpError(ValueError):
    """
    Base class for usage / input problems.

    Runners map every ScpError to exit status 2.
    """


class DimensionMismatchError(ScpError):
    """Ground-set sizes or tuple degrees do not agree."""


class InvalidPermutationError(ScpError):
    """An image sequence is not a bijection on {1..n}."""


class NotTransitiveError(ScpError):
    """A connected tuple was required but the digraph has several components."""

    def __init__(self, visited: int, n: int) -> None:
        super().__init__(f"not transitive: BFS reached {visited} of {n} vertices")
        self.visited = visited
        self.n = n


class OracleLimitError(ScpError):
    """Brute force refused because n! would blow up."""


class InstanceFormatError(ScpError):
    """
    Malformed instance / witness text.

    line is 1-based; None when the problem is not tied to one line
    (e.g. missing rows at end of file).
    """

    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>") -> None:
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
        self.line = line
        self.source = source


class VerificationError(RuntimeError):
    """A computed witness failed verification. Always a bug."""
