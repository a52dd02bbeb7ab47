#!/usr/bin/env python3
"""
Konfigürasyon ve CLI ayar birleştirme testleri
"""

from fractions import Fraction
from pathlib import Path

import pytest

from config import Config, RunConfig, constants, parse_rational
from core.exceptions import RationalParseError


@pytest.mark.parametrize('text, expected', [
    ("1319/1048576", Fraction(1319, 1048576)),
    ("3", Fraction(3)),
    (" -2/4 ", Fraction(-1, 2)),
    (5, Fraction(5)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize('text', ["0.5", "1e-3", "", "1/0", "a/b", "1/2/3"])
def test_parse_rational_rejects(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command='count', n=0)
    with pytest.raises(ValueError):
        RunConfig(command='classify', amax="0")
    with pytest.raises(ValueError):
        RunConfig(command='classify', formula_mode="literal")
    with pytest.raises(ValueError):
        RunConfig(command='classify', box=(Fraction(1, 4), Fraction(1, 5)))
    run = RunConfig(command='classify', amax="9/8", jobs=0)
    assert run.amax == Fraction(9, 8)
    assert run.jobs == 1


def test_flags_override_file_values(tmp_path, monkeypatch):
    for key in ('ALLEE_JOBS', 'ALLEE_MODE', 'ALLEE_OUT_DIR'):
        monkeypatch.delenv(key, raising=False)
    path = tmp_path / "allee.cfg"
    path.write_text("jobs=3\nmode=paper\nout=from_file\nbudget=1000\n", encoding='utf-8')
    settings = Config(str(path))
    assert settings.jobs == 3
    assert settings.formula_mode == constants.FORMULA_MODE_PAPER

    run = settings.build_run_config('count', {'n': 4, 'a': "1/100", 'b': "1/5", 'jobs': 2, 'mode': None})
    assert run.jobs == 2
    assert run.formula_mode == constants.FORMULA_MODE_PAPER
    assert run.out_dir == Path("from_file")
    assert run.budget == 1000
    assert (run.a, run.b) == (Fraction(1, 100), Fraction(1, 5))


def test_bp_command_keeps_n_list():
    run = Config().build_run_config('bp', {'n': [2, 3, 4], 'no_prune': True})
    assert run.n == 2
    assert run.n_values == (2, 3, 4)
    assert not run.prune


def test_b_range_flag():
    run = Config().build_run_config('classify', {'n': 2, 'b_range': ["1/8", "3/8"]})
    assert run.box == (Fraction(1, 8), Fraction(3, 8))
    with pytest.raises(ValueError):
        Config().build_run_config('classify', {'n': 2, 'b_range': ["0", "1"]})


def test_missing_config_file():
    with pytest.raises(FileNotFoundError):
        Config("/nonexistent/allee.cfg")
