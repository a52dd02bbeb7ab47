#!/usr/bin/env python3
"""
Dosya cache'i testleri
"""

import json

from config import constants
from db.cache_manager import CacheManager, cached_bp


def test_key_contains_version_and_prune(cache_dir):
    manager = CacheManager(str(cache_dir))
    assert manager.generate_cache_key(3) == f"bp_n3_v{constants.ALGORITHM_VERSION}.json"
    assert manager.generate_cache_key(3, prune=True).endswith("_pruned.json")


def test_set_and_get(cache_dir):
    manager = CacheManager(str(cache_dir))
    key = manager.generate_cache_key(2)
    params = {'n': 2, 'prune': False}
    assert manager.get_from_cache(key, params) is None
    manager.set_cache(key, params, {'factors': [1, 2]})
    assert manager.get_from_cache(key, params) == {'factors': [1, 2]}
    # parametre uyuşmazlığı isabet sayılmaz
    assert manager.get_from_cache(key, {'n': 2, 'prune': True}) is None
    stats = manager.get_cache_stats()
    assert (stats['hits'], stats['misses']) == (1, 2)
    assert stats['entries'] == [key]
    assert not list(cache_dir.glob('.tmp_*'))


def test_other_version_is_a_miss_and_cleaned(cache_dir):
    manager = CacheManager(str(cache_dir))
    key = manager.generate_cache_key(2)
    path = manager.set_cache(key, {}, [])
    data = json.loads(path.read_text(encoding='utf-8'))
    data['algorithm_version'] = constants.ALGORITHM_VERSION + 1
    path.write_text(json.dumps(data), encoding='utf-8')
    assert manager.get_from_cache(key) is None

    stale = cache_dir / "bp_n2_v0.json"
    stale.write_text("{}", encoding='utf-8')
    assert manager.clean_stale() == 1
    assert not stale.exists()
    assert path.exists()


def test_decorator_computes_once(cache_dir):
    calls = []

    @cached_bp(dump=lambda r: {'value': r}, load=lambda d: d['value'])
    def compute(n, prune=False):
        calls.append(n)
        return n * 10

    assert compute(4, cache_dir=str(cache_dir)) == 40
    assert compute(4, cache_dir=str(cache_dir)) == 40
    assert calls == [4]
    assert compute(4, cache_dir=str(cache_dir), use_cache=False) == 40
    assert calls == [4, 4]
