#!/usr/bin/env python3
"""
allee_cli uçtan uca testleri
"""

import json
from fractions import Fraction

import pytest

from allee_cli import format_total, main
from allee.counting import count_all
from config import constants


@pytest.fixture
def dirs(tmp_path):
    return ['--cache-dir', str(tmp_path / "cache"), '--out', str(tmp_path / "out")]


def test_count_reference_point(capsys, dirs):
    code = main(['count', '--n', '4', '--a', '1/1000', '--b', '2/9', *dirs])
    out = capsys.readouterr().out
    assert code == constants.EXIT_OK
    assert "assembled_total (dedup): 81" in out
    assert "paper: 99" in out
    assert "G2(2, 1, 1): total_positive=26 off_diagonal=6" in out


def test_count_on_border_curve_exits_non_generic(capsys, dirs):
    code = main(['count', '--n', '4', '--a', '3/64', '--b', '1/4', *dirs])
    assert code == constants.EXIT_NON_GENERIC
    assert capsys.readouterr().err


def test_decimal_parameters_are_rejected(dirs):
    with pytest.raises(SystemExit):
        main(['count', '--n', '2', '--a', '0.5', '--b', '1/4', *dirs])


def test_format_total_lines():
    total = count_all(2, Fraction(1, 1000), Fraction(2, 9))
    lines = format_total(total)
    assert lines[0].startswith("G1(1, 1): ")
    assert lines[-1] == "assembled_total (dedup): 9"


def test_oracle_command(capsys, tmp_path, dirs):
    code = main(['oracle', '--n', '1', '--a', '1/1000', '--b', '2/9', *dirs])
    summary = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert code == constants.EXIT_OK
    assert summary['count'] == 3
    assert summary['complete'] is True
    assert (tmp_path / "out" / "oracle_n1.json").exists()


def test_oracle_budget_exhaustion(dirs):
    code = main(['oracle', '--n', '2', '--a', '1/1000', '--b', '2/9', '--budget', '2', *dirs])
    assert code == constants.EXIT_ORACLE_INCOMPLETE


def test_bp_command_writes_tables(capsys, tmp_path, dirs):
    code = main(['bp', '--n', '1', '2', *dirs])
    out_dir = tmp_path / "out"
    assert code == constants.EXIT_OK
    assert (out_dir / "bp_n1_factors.csv").exists()
    assert (out_dir / "bp_n2_factors.csv").exists()
    timings = (out_dir / constants.TIMING_CSV_FILENAME).read_text(encoding='utf-8').splitlines()
    assert len(timings) == 3
    assert "bp(a, b; 2)" in capsys.readouterr().out


def test_classify_artifacts_are_reproducible(tmp_path, dirs):
    out_dir = tmp_path / "out"
    argv = ['classify', '--n', '1', '--html', str(out_dir / "map.html"),
            '--xlsx', str(out_dir / "cells.xlsx"), *dirs]
    assert main(argv) == constants.EXIT_OK
    report = out_dir / "classification_n1.json"
    first = report.read_bytes()
    assert (out_dir / "classification_n1.svg").exists()
    assert (out_dir / "map.html").exists()
    assert (out_dir / "cells.xlsx").exists()
    assert json.loads(first)['summary']['distinct_totals'] == [3]

    # sıcak cache ile aynı çıktı
    assert main(argv) == constants.EXIT_OK
    assert report.read_bytes() == first

    assert main(['render', '--report', str(report), '--svg', str(tmp_path / "again.svg"), *dirs]) == 0
    assert (tmp_path / "again.svg").exists()


def test_missing_inputs_exit_with_io_error(tmp_path, dirs):
    assert main(['render', '--report', str(tmp_path / "none.json"), *dirs]) == constants.EXIT_IO_ERROR
    assert main(['--config', str(tmp_path / "none.env"), 'count', '--n', '1',
                 '--a', '1/2', '--b', '1/4']) == constants.EXIT_IO_ERROR


@pytest.mark.slow
def test_example_usage_walkthrough(capsys):
    import example_usage

    example_usage.main()
    out = capsys.readouterr().out
    assert "dedup    81" in out
    assert "❌ Error" not in out


def test_bp_clean_cache_removes_old_versions(capsys, tmp_path, dirs):
    cache = tmp_path / "cache"
    cache.mkdir()
    stale = cache / "bp_n2_v0.json"
    stale.write_text("{}", encoding='utf-8')
    assert main(['bp', '--n', '1', '--clean-cache', *dirs]) == constants.EXIT_OK
    out = capsys.readouterr().out
    assert not stale.exists()
    assert "eski cache dosyası silindi: 1" in out
    assert f"({cache})" in out
