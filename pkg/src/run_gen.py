from __future__ import annotations

"""
CLI entrypoint generating instance files.

Usage (from repo root):

    python -m src.run_gen equal-components --n 6 --d 1 --s 3 --seed 7 --out data/eq.txt

Families: random, conjugate-pair, equal-components, few-large, mixed, connected.
Same arguments and seed always give a byte-identical file.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .config import get_config
from .errors import ScpError
from .generators import FAMILIES, generate
from .instances import render_instance, write_instance


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg = get_config()
    except ScpError as exc:
        print(f"[gen] ERROR: {exc}", file=sys.stderr)
        return 2

    parser = argparse.ArgumentParser(prog="python -m src.run_gen", description="Generate d-SCP instances.")
    parser.add_argument("family", choices=FAMILIES)
    parser.add_argument("--n", type=int, required=True, help="ground set size")
    parser.add_argument("--d", type=int, default=1, help="tuple degree")
    parser.add_argument("--s", type=int, default=cfg.generator.block_size, help="component size (equal-components, mixed)")
    parser.add_argument("--k", type=int, default=cfg.generator.large_count, help="component count (few-large)")
    parser.add_argument("--seed", type=int, default=cfg.generator.seed)
    parser.add_argument("--label-only", action="store_true", help="emit tuple a only")
    parser.add_argument("--independent", action="store_true", help="draw b independently with the same component sizes")
    parser.add_argument("--out", type=Path, default=None, help="output path (default: stdout)")
    args = parser.parse_args(argv)

    try:
        instance = generate(
            args.family,
            args.n,
            args.d,
            seed=args.seed,
            s=args.s,
            k=args.k,
            independent=args.independent,
            label_only=args.label_only,
        )
        if args.out is None:
            sys.stdout.write(render_instance(instance))
        else:
            write_instance(instance, args.out)
            print(f"[gen] {args.family} n={args.n} d={args.d} -> {args.out}", file=sys.stderr)
    except (ScpError, OSError) as exc:
        print(f"[gen] ERROR: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
