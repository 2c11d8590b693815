from __future__ import annotations

from src import run_label


def test_prints_one_label_per_tuple(write, capsys):
    path = write("two.txt", "2 1\n1 2\n2 1\n")
    assert run_label.main([str(path)]) == 0
    assert capsys.readouterr().out == "[1:(1)][1:(1)]\n[2:(2,1)]\n"


def test_label_only_file(write, capsys):
    path = write("one.txt", "3 1\n1 2 3\n")
    assert run_label.main([str(path), "--workers", "1"]) == 0
    assert capsys.readouterr().out == "[1:(1)][1:(1)][1:(1)]\n"


def test_missing_file_is_an_error(tmp_path, capsys):
    assert run_label.main([str(tmp_path / "missing.txt")]) == 2
    assert "[label] ERROR" in capsys.readouterr().err
