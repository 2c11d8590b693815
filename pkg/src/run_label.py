from __future__ import annotations

"""
CLI entrypoint printing the canonical label of each tuple in an instance file.

Usage (from repo root):

    python -m src.run_label instance.txt [--workers N]

Two tuples are simultaneously conjugate iff their printed labels are equal.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .canonical import canonical_label_graph
from .config import get_config
from .errors import ScpError
from .instances import read_instance, render_graph_label


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="python -m src.run_label", description="Print canonical labels.")
    parser.add_argument("instance", type=Path, help="instance file (tuple a, optionally tuple b)")
    parser.add_argument("--workers", type=int, default=None, help="processes for component labeling")
    args = parser.parse_args(argv)

    try:
        cfg = get_config()
        workers = args.workers if args.workers is not None else cfg.solver.workers
        instance = read_instance(args.instance)
        lines = [render_graph_label(canonical_label_graph(instance.a, workers))]
        if instance.b is not None:
            lines.append(render_graph_label(canonical_label_graph(instance.b, workers)))
    except (ScpError, OSError) as exc:
        print(f"[label] ERROR: {exc}", file=sys.stderr)
        return 2

    sys.stdout.write("\n".join(lines) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
