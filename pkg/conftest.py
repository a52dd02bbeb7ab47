#!/usr/bin/env python3
"""
Ortak pytest fixture'ları
"""

import random

import pytest

from config import config, constants


@pytest.fixture(autouse=True)
def cross_check(monkeypatch):
    """Testlerde her kök izolasyonu Sturm sayımıyla karşılaştırılır."""
    monkeypatch.setattr(config, 'cross_check', True)
    yield


@pytest.fixture
def cache_dir(tmp_path):
    """Geçici bp cache dizini"""
    path = tmp_path / "bp_cache"
    path.mkdir()
    return path


@pytest.fixture
def sample_point():
    """n = 4 referans noktası (a, b)"""
    return constants.REFERENCE_SAMPLE_A, constants.REFERENCE_SAMPLE_B


@pytest.fixture
def rng():
    """Sabit tohumlu rastgele üreteç; her test aynı örnekleri görür."""
    return random.Random(20240601)
