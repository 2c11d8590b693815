from __future__ import annotations

"""
Canonical labeling of permutation digraphs.

- relabel / code: BFS relabeling from one start vertex and the code string.
- canonical_label_connected: minimum code over all start vertices.
- canonical_label_graph: whole-graph label from sorted component labels.
- extract_conjugator: witness from two equal connected labels.
"""

from .labels import (
    canonical_label_connected,
    canonical_label_graph,
    extract_conjugator,
    label_components,
    label_tuples,
    labeled_components,
)
from .radix import radix_sort
from .relabel import code, relabel

__all__ = [
    "canonical_label_connected",
    "canonical_label_graph",
    "code",
    "extract_conjugator",
    "label_components",
    "label_tuples",
    "labeled_components",
    "radix_sort",
    "relabel",
]
