from __future__ import annotations

import ast
import math
import operator
from typing import Callable, Dict

from ..errors import ScpError

# Restricted arithmetic over the single variable n, used for the
# large-component threshold (e.g. "n / max(1, floor(log2(n)))").

_BINARY: Dict[type, Callable[[float, float], float]] = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.FloorDiv: operator.floordiv,
    ast.Pow: operator.pow,
}

_FUNCTIONS: Dict[str, Callable[..., float]] = {
    "log2": math.log2,
    "log": math.log,
    "floor": math.floor,
    "ceil": math.ceil,
    "sqrt": math.sqrt,
    "max": max,
    "min": min,
}


def _eval(node: ast.AST, n: float) -> float:
    if isinstance(node, ast.Expression):
        return _eval(node.body, n)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return node.value
    if isinstance(node, ast.Name) and node.id == "n":
        return n
    if isinstance(node, ast.BinOp) and type(node.op) in _BINARY:
        return _BINARY[type(node.op)](_eval(node.left, n), _eval(node.right, n))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        value = _eval(node.operand, n)
        return -value if isinstance(node.op, ast.USub) else value
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id in _FUNCTIONS
        and not node.keywords
    ):
        args = [_eval(arg, n) for arg in node.args]
        return _FUNCTIONS[node.func.id](*args)
    raise ScpError(f"unsupported element in threshold expression: {ast.dump(node)}")


def compile_threshold(text: str) -> Callable[[int], float]:
    """
    Parse an expression over n once; the returned callable evaluates it.

    Parse errors and disallowed names surface immediately (probing n = 2),
    not on first use inside the solver.
    """
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ScpError(f"cannot parse threshold expression {text!r}: {exc.msg}") from exc

    def threshold(n: int) -> float:
        try:
            return float(_eval(tree, float(n)))
        except (ArithmeticError, ValueError, TypeError) as exc:
            if isinstance(exc, ScpError):
                raise
            raise ScpError(f"threshold expression {text!r} failed at n={n}: {exc}") from exc

    threshold(2)
    return threshold
