from __future__ import annotations

"""
CLI entrypoint re-checking solve output against its instance.

Usage (from repo root):

    python -m src.run_solve inst.txt > answer.txt
    python -m src.run_verify inst.txt answer.txt      # or '-' for stdin

A "YES" answer is valid when the printed tau conjugates a to b. A "NO"
answer is checked by brute force when n <= SCP_ORACLE_MAX_N, otherwise by
re-running the solver.
Exit status: 0 valid, 1 invalid, 2 usage / parse error.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .config import get_config
from .errors import ScpError
from .instances import parse_witness, read_instance
from .oracle import brute_force_scp
from .perms import verify_conjugacy
from .solver import solve


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="python -m src.run_verify", description="Verify a solve answer.")
    parser.add_argument("instance", type=Path)
    parser.add_argument("answer", help="answer file, or '-' for stdin")
    args = parser.parse_args(argv)

    try:
        cfg = get_config()
        instance = read_instance(args.instance, require_b=True)
        assert instance.b is not None
        if args.answer == "-":
            text, source = sys.stdin.read(), "<stdin>"
        else:
            text, source = Path(args.answer).read_text(encoding="utf-8"), args.answer
        witness = parse_witness(text, instance.n, source=source)

        if witness is None and instance.n <= cfg.oracle.max_n:
            valid = brute_force_scp(instance.a, instance.b, cfg.oracle.max_n) is None
        elif witness is None:
            valid = not solve(instance.a, instance.b, cfg.solver.strategy()).conjugate
        else:
            valid = verify_conjugacy(instance.a, instance.b, witness)
    except (ScpError, OSError) as exc:
        print(f"[verify] ERROR: {exc}", file=sys.stderr)
        return 2

    print("VALID" if valid else "INVALID")
    return 0 if valid else 1


if __name__ == "__main__":
    sys.exit(main())
