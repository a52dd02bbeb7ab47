#!/usr/bin/env python3
"""
Cache Manager - Border polinomları için sürümlü JSON dosya cache'i
Her (n, algoritma sürümü, budama) üçlüsü ayrı bir dosyada tutulur; yazım atomiktir.
"""

import json
import hashlib
import logging
import os
import tempfile
from datetime import datetime
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Dict, Optional
from dataclasses import dataclass, field

from config import constants

logger = logging.getLogger(__name__)


@dataclass
class CacheEntry:
    """Cache girişi için veri modeli"""
    cache_key: str
    query_params: Dict[str, Any]
    result_data: Any
    algorithm_version: int = constants.ALGORITHM_VERSION
    created_at: datetime = field(default_factory=datetime.now)
    seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cache_key': self.cache_key,
            'query_params': self.query_params,
            'algorithm_version': self.algorithm_version,
            'created_at': self.created_at.isoformat(),
            'seconds': self.seconds,
            'result_data': self.result_data,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CacheEntry':
        return cls(
            cache_key=data['cache_key'],
            query_params=data.get('query_params', {}),
            result_data=data['result_data'],
            algorithm_version=int(data['algorithm_version']),
            created_at=datetime.fromisoformat(data['created_at']),
            seconds=float(data.get('seconds', 0.0)),
        )


class CacheManager:
    """
    Dosya tabanlı cache yönetimi.

    Anahtar dosya adının kendisidir (bp_n{n}_v{version}[_pruned].json); isabet için
    dosyadaki sürüm ve parametrelerin de birebir eşleşmesi gerekir.
    """

    def __init__(self, cache_dir: Optional[str] = None):
        from config import config
        self.cache_dir = Path(cache_dir or config.cache_dir)
        self.hits = 0
        self.misses = 0

    def generate_cache_key(self, n: int, prune: bool = False) -> str:
        """
        Border polinomu cache anahtarı (dosya adı) oluşturur.

        Args:
            n: yama sayısı
            prune: kutu dışı faktörler atıldı mı

        Returns:
            str: Cache key
        """
        template = constants.BP_CACHE_FILENAME_PRUNED if prune else constants.BP_CACHE_FILENAME
        return template.format(n=n, version=constants.ALGORITHM_VERSION)

    @staticmethod
    def params_hash(params: Dict[str, Any]) -> str:
        return hashlib.md5(json.dumps(params, sort_keys=True, default=str).encode()).hexdigest()

    def path_for(self, cache_key: str) -> Path:
        return self.cache_dir / cache_key

    def get_from_cache(self, cache_key: str, query_params: Optional[Dict[str, Any]] = None) -> Optional[Any]:
        """
        Cache'den veri getirir. Bozuk ya da uyuşmayan dosya yok sayılır.

        Args:
            cache_key: Cache anahtarı
            query_params: beklenen parametreler (verilirse birebir eşleşmeli)

        Returns:
            Cache'deki veri veya None
        """
        path = self.path_for(cache_key)
        if not path.exists():
            self.misses += 1
            logger.info(constants.LOG_MSG_CACHE_MISS.format(key=cache_key))
            return None
        try:
            with open(path, 'r', encoding='utf-8') as f:
                entry = CacheEntry.from_dict(json.load(f))
        except (OSError, ValueError, KeyError, TypeError) as e:
            logger.warning(constants.LOG_MSG_CACHE_CORRUPT.format(path=path, error=e))
            self.misses += 1
            return None
        if entry.algorithm_version != constants.ALGORITHM_VERSION or (
                query_params is not None and self.params_hash(entry.query_params) != self.params_hash(query_params)):
            self.misses += 1
            logger.info(constants.LOG_MSG_CACHE_MISS.format(key=cache_key))
            return None
        self.hits += 1
        logger.info(constants.LOG_MSG_CACHE_HIT.format(key=cache_key))
        return entry.result_data

    def set_cache(self, cache_key: str, query_params: Dict[str, Any], result_data: Any,
                  seconds: float = 0.0) -> Path:
        """
        Cache'e veri kaydet (geçici dosyaya yaz, sonra os.replace).

        Raises:
            OSError: dizin oluşturulamaz ya da yazılamazsa
        """
        path = self.path_for(cache_key)
        entry = CacheEntry(cache_key, query_params, result_data, seconds=seconds)
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            fd, tmp_name = tempfile.mkstemp(prefix='.tmp_', suffix='.json', dir=self.cache_dir)
            try:
                with os.fdopen(fd, 'w', encoding='utf-8') as f:
                    json.dump(entry.to_dict(), f, ensure_ascii=False, indent=1, sort_keys=True)
                os.replace(tmp_name, path)
            except BaseException:
                if os.path.exists(tmp_name):
                    os.unlink(tmp_name)
                raise
        except OSError as e:
            logger.error(constants.ERROR_CACHE_WRITE.format(path=path, error=e))
            raise
        logger.info(constants.LOG_MSG_CACHE_SAVED.format(path=path))
        return path

    def clean_stale(self) -> int:
        """Başka algoritma sürümüne ait cache dosyalarını siler"""
        if not self.cache_dir.exists():
            return 0
        suffix = f"_v{constants.ALGORITHM_VERSION}"
        removed = 0
        for path in self.cache_dir.glob('bp_n*_v*.json'):
            if suffix + '.json' not in path.name and suffix + '_pruned.json' not in path.name:
                path.unlink()
                removed += 1
        if removed:
            logger.info(constants.LOG_MSG_CACHE_CLEANED.format(count=removed))
        return removed

    def get_cache_stats(self) -> Dict[str, Any]:
        """Cache istatistiklerini döndürür"""
        files = sorted(self.cache_dir.glob('bp_n*.json')) if self.cache_dir.exists() else []
        return {
            'cache_dir': str(self.cache_dir),
            'total_entries': len(files),
            'total_bytes': sum(p.stat().st_size for p in files),
            'hits': self.hits,
            'misses': self.misses,
            'entries': [p.name for p in files],
        }


def cached_bp(dump: Callable[[Any], Dict[str, Any]], load: Callable[[Dict[str, Any]], Any]):
    """
    Fonksiyon decorator - border polinomu hesabını dosya cache'i ile sarar.

    Sarılan fonksiyon ``fn(n, *, cache_dir=None, prune=False, use_cache=True, **kwargs)``
    biçimindedir; cache anahtarı yalnızca (n, prune, algoritma sürümü)'dür.

    Args:
        dump: sonucu JSON'a uygun sözlüğe çeviren fonksiyon
        load: sözlükten sonucu geri kuran fonksiyon
    """
    def decorator(func: Callable):
        @wraps(func)
        def wrapper(n: int, *args, cache_dir: Optional[str] = None, prune: bool = False,
                    use_cache: bool = True, **kwargs):
            if not use_cache:
                return func(n, *args, prune=prune, **kwargs)
            manager = CacheManager(cache_dir)
            cache_key = manager.generate_cache_key(n, prune)
            params = {'n': n, 'prune': prune, 'version': constants.ALGORITHM_VERSION}
            cached = manager.get_from_cache(cache_key, params)
            if cached is not None:
                try:
                    return load(cached)
                except (KeyError, ValueError, TypeError) as e:
                    logger.warning(constants.LOG_MSG_CACHE_CORRUPT.format(path=cache_key, error=e))

            start_time = datetime.now()
            result = func(n, *args, prune=prune, **kwargs)
            seconds = (datetime.now() - start_time).total_seconds()
            manager.set_cache(cache_key, params, dump(result), seconds=seconds)
            return result

        return wrapper
    return decorator
