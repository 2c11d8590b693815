from __future__ import annotations

import pytest

from src.config import DEFAULT_THRESHOLD, StrategyConfig
from src.errors import ScpError
from src.utils.expr import compile_threshold


def test_default_threshold_values():
    t = compile_threshold(DEFAULT_THRESHOLD)
    assert t(1) == 1.0  # log2(1) = 0, max(1, 0) = 1
    assert t(2) == 2.0
    assert t(16) == 4.0
    assert t(1024) == 102.4


def test_arithmetic_and_functions():
    assert compile_threshold("sqrt(n) + 1")(16) == 5.0
    assert compile_threshold("-n // 3 + ceil(n / 4)")(10) == -4 + 3
    assert compile_threshold("min(n, 8) ** 2")(3) == 9.0


@pytest.mark.parametrize(
    "expr",
    ["__import__('os')", "m + 1", "n.real", "open('x')", "n +", "lambda: n", "log2(n, base=2)"],
)
def test_rejects_anything_outside_the_grammar(expr):
    with pytest.raises(ScpError):
        compile_threshold(expr)


def test_strategy_config_validation():
    with pytest.raises(ScpError):
        StrategyConfig.build(mode="fastest")
    with pytest.raises(ScpError):
        StrategyConfig.build(workers=0)


def test_is_large_is_monotone_in_component_size():
    cfg = StrategyConfig.build()
    flags = [cfg.is_large(size, 64) for size in range(1, 65)]
    # once large, stays large
    assert flags == sorted(flags)
    assert cfg.is_large(11, 64) and not cfg.is_large(10, 64)
