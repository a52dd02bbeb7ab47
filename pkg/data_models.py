#!/usr/bin/env python3
"""
Allee RRC Data Models
Sınıflandırma hattının veri modelleri: hücre örnekleri, sayımlar, oracle sonuçları ve rapor
"""

import pandas as pd
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Dict, Optional, Any, Tuple
from datetime import datetime

from config import constants
from core.polycore import RatInterval


def _frac(value: Any) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(str(value))


@dataclass
class ReducedCount:
    """
    Bir indirgenmiş sistemin (a, b) noktasındaki kesin pozitif çözüm sayıları.

    Attributes:
        multiplicities (Tuple[int, ...]): (n1, n2) ya da (n1, n2, n3)
        total_positive (int): tüm pozitif çözümler (köşegen olanlar dahil)
        off_diagonal (int): tüm değerleri ikişer farklı olan sıralı çözümler
        orbits (int): off_diagonal / |stab|, eşit çokluklu değerlerin yer değişimine göre yörünge sayısı
        paper_c (int): raporlama geleneğindeki c değeri (ikililerde off_diagonal, üçlülerde orbits)
        method (str): "elimination" veya "oracle"
    """
    multiplicities: Tuple[int, ...]
    total_positive: int
    off_diagonal: int
    orbits: int = 0
    paper_c: int = 0
    method: str = "elimination"

    @property
    def kind(self) -> str:
        return "G1" if len(self.multiplicities) == 2 else "G2"

    @property
    def label(self) -> str:
        return f"{self.kind}{tuple(self.multiplicities)}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'multiplicities': list(self.multiplicities),
            'total_positive': self.total_positive,
            'off_diagonal': self.off_diagonal,
            'orbits': self.orbits,
            'paper_c': self.paper_c,
            'method': self.method,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ReducedCount':
        return cls(
            multiplicities=tuple(data['multiplicities']),
            total_positive=int(data['total_positive']),
            off_diagonal=int(data['off_diagonal']),
            orbits=int(data.get('orbits', 0)),
            paper_c=int(data.get('paper_c', 0)),
            method=data.get('method', 'elimination'),
        )


@dataclass
class TotalCount:
    """
    Tam sistemin denge noktası sayısı.

    Attributes:
        n (int): yama sayısı
        counts (List[ReducedCount]): bölüntü başına sayımlar
        assembled_total (int): seçilen moddaki toplam
        formula_mode (str): "dedup" veya "paper"
        alternatives (Dict[str, int]): tüm modların değerleri (dedup, paper, varsa printed)
        note (str): tutarsızlık notu
    """
    n: int
    counts: List[ReducedCount]
    assembled_total: int
    formula_mode: str = constants.FORMULA_MODE_DEDUP
    alternatives: Dict[str, int] = field(default_factory=dict)
    note: str = ""

    def count_for(self, multiplicities: Tuple[int, ...]) -> ReducedCount:
        for c in self.counts:
            if tuple(c.multiplicities) == tuple(multiplicities):
                return c
        raise KeyError(multiplicities)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'counts': {c.label: c.to_dict() for c in self.counts},
            'assembled_total': self.assembled_total,
            'formula_mode': self.formula_mode,
            'alternatives': dict(self.alternatives),
            'note': self.note,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TotalCount':
        return cls(
            n=int(data['n']),
            counts=[ReducedCount.from_dict(c) for c in data['counts'].values()],
            assembled_total=int(data['assembled_total']),
            formula_mode=data.get('formula_mode', constants.FORMULA_MODE_DEDUP),
            alternatives={k: int(v) for k, v in data.get('alternatives', {}).items()},
            note=data.get('note', ''),
        )


@dataclass
class CellSample:
    """
    Açık bir hücreyi temsil eden rasyonel (a, b) noktası.

    Attributes:
        a (Fraction): a koordinatı
        b (Fraction): b koordinatı
        stack_index (Tuple[int, int]): (a-aralığı indeksi, b-aralığı indeksi)
        cell_id (str): kararlı kimlik, örn. "c004_02"
        total (Optional[TotalCount]): noktadaki sayım (sınıflandırmadan sonra dolar)
        oracle_count (Optional[int]): oracle ile kontrol edildiyse sertifikalı sayı
    """
    a: Fraction
    b: Fraction
    stack_index: Tuple[int, int]
    cell_id: str
    total: Optional[TotalCount] = None
    oracle_count: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cell_id': self.cell_id,
            'stack_index': list(self.stack_index),
            'a': str(self.a),
            'b': str(self.b),
            'counts': {} if self.total is None else {c.label: c.to_dict() for c in self.total.counts},
            'total': None if self.total is None else self.total.assembled_total,
            'alternatives': {} if self.total is None else dict(self.total.alternatives),
            'oracle_count': self.oracle_count,
        }

    def to_row(self) -> Dict[str, Any]:
        """CSV için düz satır."""
        row = {
            'cell_id': self.cell_id,
            'a_num': self.a.numerator,
            'a_den': self.a.denominator,
            'b_num': self.b.numerator,
            'b_den': self.b.denominator,
            'a_decimal': float(self.a),
            'b_decimal': float(self.b),
            'total': None if self.total is None else self.total.assembled_total,
            'oracle_count': self.oracle_count,
        }
        if self.total is not None:
            for c in self.total.counts:
                row[f"off_{c.label}"] = c.off_diagonal
        return row

    @classmethod
    def from_dict(cls, data: Dict[str, Any], n: int = 0,
                  formula_mode: str = constants.FORMULA_MODE_DEDUP) -> 'CellSample':
        total = None
        if data.get('total') is not None:
            total = TotalCount(
                n=n,
                counts=[ReducedCount.from_dict(c) for c in data.get('counts', {}).values()],
                assembled_total=int(data['total']),
                formula_mode=formula_mode,
                alternatives={k: int(v) for k, v in data.get('alternatives', {}).items()},
            )
        return cls(
            a=_frac(data['a']),
            b=_frac(data['b']),
            stack_index=tuple(data['stack_index']),
            cell_id=data['cell_id'],
            total=total,
            oracle_count=data.get('oracle_count'),
        )


@dataclass
class CertifiedBox:
    """
    Oracle kutusu.

    Attributes:
        box (List[RatInterval]): koordinat aralıkları
        status (str): "unique-root" veya "unresolved"
        orbit_size (int): simetrik modda kutunun temsil ettiği permütasyon sayısı
    """
    box: List[RatInterval]
    status: str
    orbit_size: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'status': self.status,
            'orbit_size': self.orbit_size,
            'box': [iv.to_dict() for iv in self.box],
            'decimal': [f"{float(iv.midpoint):.12g}" for iv in self.box],
        }


@dataclass
class OracleResult:
    """Aralık çözücünün çıktısı."""
    n: int
    a: Fraction
    b: Fraction
    count: int
    complete: bool
    boxes: List[CertifiedBox] = field(default_factory=list)
    unresolved: List[CertifiedBox] = field(default_factory=list)
    boxes_processed: int = 0
    bound_violations: int = 0
    symmetric: bool = False
    seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'a': str(self.a),
            'b': str(self.b),
            'count': self.count,
            'complete': self.complete,
            'boxes_processed': self.boxes_processed,
            'bound_violations': self.bound_violations,
            'symmetric': self.symmetric,
            'seconds': round(self.seconds, 3),
            'boxes': [b.to_dict() for b in self.boxes],
            'unresolved': [b.to_dict() for b in self.unresolved],
        }


@dataclass
class ClassificationReport:
    """
    (a, b) düzleminin tam sınıflandırma haritası.

    Attributes:
        n (int): yama sayısı
        amax (Fraction): a kutusunun üst sınırı
        factors (List[Dict[str, Any]]): border polinomu faktörleri (JSON)
        cells (List[CellSample]): hücre örnekleri ve sayımları
        formula_mode (str): toplam modu
        partitions (Dict[str, Any]): bölüntü bilgisi
        oracle_checks (List[Dict[str, Any]]): oracle karşılaştırmaları
        seconds (Dict[str, float]): adım süreleri
        created_at (datetime): oluşturulma zamanı (JSON'a yazılmaz)
    """
    n: int
    amax: Fraction
    factors: List[Dict[str, Any]]
    cells: List[CellSample]
    formula_mode: str = constants.FORMULA_MODE_DEDUP
    partitions: Dict[str, Any] = field(default_factory=dict)
    oracle_checks: List[Dict[str, Any]] = field(default_factory=list)
    seconds: Dict[str, float] = field(default_factory=dict)
    bp_version: int = constants.ALGORITHM_VERSION
    created_at: datetime = field(default_factory=datetime.now)

    def summary(self) -> Dict[str, Any]:
        per_total: Dict[int, int] = {}
        for cell in self.cells:
            if cell.total is not None:
                per_total[cell.total.assembled_total] = per_total.get(cell.total.assembled_total, 0) + 1
        return {
            'distinct_totals': sorted(per_total),
            'cells_per_total': {str(k): per_total[k] for k in sorted(per_total)},
            'cell_count': len(self.cells),
            'factor_count': len(self.factors),
        }

    def to_dict(self) -> Dict[str, Any]:
        # seconds ve created_at yazılmaz
        return {
            'n': self.n,
            'bp_version': self.bp_version,
            'amax': str(self.amax),
            'formula_mode': self.formula_mode,
            'partitions': self.partitions,
            'factors': self.factors,
            'cells': [c.to_dict() for c in self.cells],
            'oracle_checks': self.oracle_checks,
            'summary': self.summary(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ClassificationReport':
        n = int(data['n'])
        mode = data.get('formula_mode', constants.FORMULA_MODE_DEDUP)
        return cls(
            n=n,
            amax=_frac(data['amax']),
            factors=list(data.get('factors', [])),
            cells=[CellSample.from_dict(c, n, mode) for c in data.get('cells', [])],
            formula_mode=mode,
            partitions=data.get('partitions', {}),
            oracle_checks=list(data.get('oracle_checks', [])),
            bp_version=int(data.get('bp_version', constants.ALGORITHM_VERSION)),
        )

    def cells_frame(self) -> pd.DataFrame:
        """Hücre tablosunu DataFrame olarak döndürür"""
        return pd.DataFrame([c.to_row() for c in self.cells])

    def factors_frame(self) -> pd.DataFrame:
        return pd.DataFrame([{
            'index': i,
            'factor': f.get('expr', ''),
            'provenance': ','.join(f.get('provenance', [])),
            'sources': ';'.join(f.get('sources', [])),
        } for i, f in enumerate(self.factors)])
