from __future__ import annotations

"""
CLI entrypoint for deciding one d-SCP instance.

Usage (from repo root):

    python -m src.run_solve instance.txt [--strategy auto|label|pairwise]
                                         [--threshold EXPR] [--workers N] [--stats]

stdout: "YES" and the conjugator images of 1..n, or "NO".
Exit status: 0 YES, 1 NO, 2 usage / parse error.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .config import MODES, AppConfig, StrategyConfig, get_config
from .errors import ScpError
from .instances import read_instance, render_solution
from .models import ScpResult
from .solver import solve


def add_strategy_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--strategy", choices=MODES, default=None, help="size-class matching strategy")
    parser.add_argument(
        "--threshold",
        default=None,
        help="large-component threshold as an expression over n, e.g. 'n / max(1, floor(log2(n)))'",
    )
    parser.add_argument("--workers", type=int, default=None, help="processes for component labeling")


def strategy_from_args(args: argparse.Namespace, cfg: AppConfig) -> StrategyConfig:
    return StrategyConfig.build(
        mode=args.strategy or cfg.solver.mode,
        threshold_expr=args.threshold or cfg.solver.threshold_expr,
        workers=args.workers if args.workers is not None else cfg.solver.workers,
    )


def _print_stats(result: ScpResult) -> None:
    stats = result.stats
    print(f"[solve] component sizes a={stats.sizes_a} b={stats.sizes_b}", file=sys.stderr)
    for row in stats.classes:
        print(f"[solve]   size={row.size} count={row.count} strategy={row.strategy}", file=sys.stderr)
    for phase, seconds in stats.seconds.items():
        print(f"[solve]   {phase}: {seconds:.4f}s", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="python -m src.run_solve", description="Decide simultaneous conjugacy.")
    parser.add_argument("instance", type=Path, help="instance file with tuples a and b")
    add_strategy_args(parser)
    parser.add_argument("--stats", action="store_true", help="print per-size-class details to stderr")
    args = parser.parse_args(argv)

    try:
        cfg = get_config()
        strategy = strategy_from_args(args, cfg)
        instance = read_instance(args.instance, require_b=True)
        assert instance.b is not None
        result = solve(instance.a, instance.b, strategy)
    except (ScpError, OSError) as exc:
        print(f"[solve] ERROR: {exc}", file=sys.stderr)
        return 2

    if args.stats:
        _print_stats(result)
    sys.stdout.write(render_solution(result.witness if result.conjugate else None))
    return 0 if result.conjugate else 1


if __name__ == "__main__":
    sys.exit(main())
