#!/usr/bin/env python3
"""
Borderpoly - İndirgenmiş sistemlerin border polinomları ve bp(a, b; n) montajı

Her bölüntü için eliminant çekirdeğinin diskriminantı (katlı kök / Jacobi lokusu),
sınır (x_i = 0) ve çakışma (iki değer eşitleniyor) rezultantları ile a, b, b - 1/2
faktörleri toplanır; ardından karesiz, ilkel, ikişer aralarında asal tabana indirilir.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy import Poly

from config import constants
from core.elimination import coprime_base_tagged, discriminant, resultant
from core.exceptions import InvalidMultiplicitiesError
from core.polycore import MultiPoly, product
from allee.systems import Eliminant, eliminant, partitions
from db.cache_manager import cached_bp

logger = logging.getLogger(__name__)

_SOURCE_SEPARATOR = '|'


@dataclass
class BorderFactor:
    """
    Border polinomunun tek bir faktörü.

    Attributes:
        poly (MultiPoly): {a, b} üzerinde karesiz, ilkel faktör
        multiplicity (int): kaynak eliminasyonlardaki en büyük katlılık
        provenance (List[str]): jacobian-locus, boundary-x=0, coincidence, leading-coeff, trivial
        sources (List[str]): faktörü üreten bölüntüler, örn. "G1(2, 2)"
    """
    poly: MultiPoly
    multiplicity: int = 1
    provenance: List[str] = field(default_factory=list)
    sources: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {
            'poly': self.poly.to_json(),
            'expr': str(self.poly),
            'multiplicity': self.multiplicity,
            'provenance': list(self.provenance),
            'sources': list(self.sources),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> 'BorderFactor':
        return cls(
            poly=MultiPoly.from_json(data['poly']),
            multiplicity=int(data.get('multiplicity', 1)),
            provenance=list(data.get('provenance', [])),
            sources=list(data.get('sources', [])),
        )


@dataclass
class BorderPoly:
    """
    bp(a, b): faktör listesi, kaynak etiketleri ve (varsa) kutu dışı atılan faktörler.

    Attributes:
        n (int): yama sayısı
        label (str): "bp(4)", "G1(3, 1)" gibi
        factors (List[BorderFactor]): ikişer aralarında asal faktörler
        pruned (List[BorderFactor]): kutuda kökü olmadığı sertifikalanıp atılanlar
        seconds (float): hesap süresi
    """
    n: int
    label: str
    factors: List[BorderFactor] = field(default_factory=list)
    pruned: List[BorderFactor] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def polys(self) -> List[MultiPoly]:
        return [f.poly for f in self.factors]

    def product(self) -> MultiPoly:
        return product(self.polys)

    def zero_factors(self, a: Fraction, b: Fraction) -> List[MultiPoly]:
        """(a, b)'de sıfır olan faktörler."""
        return [p for p in self.polys if p.evaluate({'a': a, 'b': b}) == 0]

    def vanishes_at(self, a: Fraction, b: Fraction) -> bool:
        return bool(self.zero_factors(a, b))

    def to_dict(self) -> Dict[str, object]:
        return {
            'n': self.n,
            'label': self.label,
            'version': constants.ALGORITHM_VERSION,
            'seconds': round(self.seconds, 3),
            'factors': [f.to_dict() for f in self.factors],
            'pruned': [f.to_dict() for f in self.pruned],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> 'BorderPoly':
        return cls(
            n=int(data['n']),
            label=str(data['label']),
            factors=[BorderFactor.from_dict(f) for f in data['factors']],
            pruned=[BorderFactor.from_dict(f) for f in data.get('pruned', [])],
            seconds=float(data.get('seconds', 0.0)),
        )

    def summary(self) -> List[Dict[str, object]]:
        """CLI ve Excel için faktör özeti."""
        return [{
            'index': i,
            'factor': str(f.poly),
            'deg_a': f.poly.degree('a'),
            'deg_b': f.poly.degree('b'),
            'terms': len(f.poly.terms),
            'provenance': ','.join(f.provenance),
            'sources': ';'.join(f.sources),
        } for i, f in enumerate(self.factors)]


def trivial_factors() -> List[MultiPoly]:
    a, b = MultiPoly.var('a'), MultiPoly.var('b')
    return [a, b, b - Fraction(1, 2)]


def _label(multiplicities: Sequence[int]) -> str:
    kind = 'G1' if len(multiplicities) == 2 else 'G2'
    return f"{kind}{tuple(multiplicities)}"


def eliminant_factors(e: Eliminant) -> List[Tuple[MultiPoly, str]]:
    """
    Bir eliminantın border polinomuna kattığı ham polinomlar ve etiketleri.

    Çekirdeğin y'ye göre başkatsayısı sabittir, bu yüzden kök sayısı yalnızca
    katlı kökte (diskriminant) ya da bir yan koşulun işaret değiştirdiği yerde
    (rezultant) değişebilir.
    """
    core = e.core
    items: List[Tuple[MultiPoly, str]] = [(p, constants.TAG_TRIVIAL) for p in trivial_factors()]
    items.append((core.leading_coefficient('y'), constants.TAG_LEADING))
    items.append((discriminant(core, 'y'), constants.TAG_JACOBIAN))
    items.append((core.substitute({'y': 0}), constants.TAG_BOUNDARY))
    for _, side in e.positivity:
        items.append((resultant(core, side, 'y'), constants.TAG_BOUNDARY))
    for _, side in e.distinctness:
        items.append((resultant(core, side, 'y'), constants.TAG_COINCIDENCE))
    return items


def _build(multiplicities: Tuple[int, ...], n: int) -> BorderPoly:
    label = _label(multiplicities)
    kind = label[:2]
    logger.info(constants.LOG_MSG_BP_PARTITION_START.format(kind=kind, multiplicities=multiplicities))
    start = time.perf_counter()
    raw = eliminant_factors(eliminant(multiplicities))
    base = coprime_base_tagged((p, (f"{tag}{_SOURCE_SEPARATOR}{label}",)) for p, tag in raw)
    bp = BorderPoly(n=n, label=label, factors=[_factor_from_tags(p, tags, k) for p, tags, k in base])
    bp.seconds = time.perf_counter() - start
    logger.info(constants.LOG_MSG_BP_PARTITION_DONE.format(
        kind=kind, multiplicities=multiplicities, count=len(bp.factors), seconds=bp.seconds))
    return bp


def _factor_from_tags(poly: MultiPoly, tags: Iterable[str], multiplicity: int) -> BorderFactor:
    provenance, sources = set(), set()
    for tag in tags:
        kind, _, source = tag.partition(_SOURCE_SEPARATOR)
        provenance.add(kind)
        if source:
            sources.add(source)
    return BorderFactor(poly, multiplicity, sorted(provenance), sorted(sources))


def bp_G1(n1: int, n2: int) -> BorderPoly:
    """
    G1(n1, n2) sisteminin border polinomu.

    Args:
        n1 (int): y değerini alan koordinat sayısı
        n2 (int): z değerini alan koordinat sayısı

    Returns:
        BorderPoly: karesiz, ilkel, ikişer aralarında asal faktörler

    Raises:
        InvalidMultiplicitiesError: n1 ≥ n2 > 0 sağlanmıyorsa
    """
    if not (n1 >= n2 > 0):
        raise InvalidMultiplicitiesError(
            constants.ERROR_BAD_MULTIPLICITIES.format(multiplicities=(n1, n2), n=n1 + n2))
    return _build((n1, n2), n1 + n2)


def bp_G2(n1: int, n2: int, n3: int) -> BorderPoly:
    """G2(n1, n2, n3) sisteminin border polinomu; n1 ≥ n2 ≥ n3 > 0."""
    if not (n1 >= n2 >= n3 > 0):
        raise InvalidMultiplicitiesError(
            constants.ERROR_BAD_MULTIPLICITIES.format(multiplicities=(n1, n2, n3), n=n1 + n2 + n3))
    return _build((n1, n2, n3), n1 + n2 + n3)


def bp_partition(multiplicities: Tuple[int, ...]) -> BorderPoly:
    """Süreç havuzu için üst düzey giriş noktası."""
    if len(multiplicities) == 2:
        return bp_G1(*multiplicities)
    return bp_G2(*multiplicities)


# -- kutu sertifikası ve budama -----------------------------------------------

def has_no_root_in_box(f: MultiPoly) -> bool:
    """
    f'nin a > 0, 0 < b < 1/2 açık kutusunda kökü olmadığının sertifikası.

    b = t / (2(1 + t)) dönüşümü (0, ∞) ışınını (0, 1/2) aralığına taşır; payda
    (2(1 + t))^d ile temizlenen polinomun tüm katsayıları aynı işaretliyse
    a, t > 0 için sıfır olamaz. Sertifika bulunamazsa False döner (kök var demek değildir).
    """
    if f.is_zero:
        return False
    if f.is_constant:
        return True
    a, t = sympy.symbols('a t')
    degree_b = max(f.degree('b'), 0)
    total = sympy.Integer(0)
    for k, coeff in f.coefficients_in('b').items():
        total += coeff.to_expr() * t ** k * (2 * (1 + t)) ** (degree_b - k)
    mapped = Poly(sympy.expand(total), a, t)
    signs = {c > 0 for c in mapped.coeffs() if c != 0}
    return len(signs) == 1


def prune_factors(bp: BorderPoly) -> BorderPoly:
    """
    Kutuda kökü olmadığı sertifikalanan faktörleri ayırır; a, b, b - 1/2 kutunun
    kenarları olarak rapor için tutulur.
    """
    kept, pruned = [], []
    for factor in bp.factors:
        if constants.TAG_TRIVIAL not in factor.provenance and has_no_root_in_box(factor.poly):
            logger.info(constants.LOG_MSG_BP_PRUNED.format(factor=factor.poly))
            pruned.append(factor)
        else:
            kept.append(factor)
    return BorderPoly(bp.n, bp.label, kept, bp.pruned + pruned, bp.seconds)


# -- bp(a, b; n) ---------------------------------------------------------------

def merge(n: int, parts: Iterable[BorderPoly], label: Optional[str] = None) -> BorderPoly:
    """Bölüntü border polinomlarının birleşimini yeniden ikişer asal tabana indirir."""
    items = []
    for part in parts:
        for factor in part.factors:
            tags = [f"{kind}{_SOURCE_SEPARATOR}{source}"
                    for kind in factor.provenance for source in (factor.sources or [''])]
            items.append((factor.poly ** factor.multiplicity, tags))
    if not items:
        items = [(p, (constants.TAG_TRIVIAL,)) for p in trivial_factors()]
    base = coprime_base_tagged(items)
    return BorderPoly(n=n, label=label or f"bp({n})",
                      factors=[_factor_from_tags(p, tags, k) for p, tags, k in base])


def _dump(bp: BorderPoly) -> Dict[str, object]:
    return bp.to_dict()


@cached_bp(dump=_dump, load=BorderPoly.from_dict)
def bp_total(n: int, prune: bool = False, jobs: int = 1) -> BorderPoly:
    """
    bp(a, b; n) = Π bp_G1(n1, n2) · Π bp_G2(n1, n2, n3), bölüntüler üzerinden.

    Args:
        n (int): yama sayısı
        prune (bool): kutuda kökü olmayan faktörleri ayır
        jobs (int): paralel bölüntü işçisi sayısı

    Returns:
        BorderPoly: ikişer aralarında asal, karesiz faktörler
    """
    start = time.perf_counter()
    parts = partitions(n).all()
    if jobs > 1 and len(parts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pieces = list(pool.map(bp_partition, parts))
    else:
        pieces = [bp_partition(p) for p in parts]
    bp = merge(n, pieces)
    if prune:
        bp = prune_factors(bp)
    bp.seconds = time.perf_counter() - start
    logger.info(constants.LOG_MSG_BP_TOTAL_DONE.format(n=n, count=len(bp.factors), seconds=bp.seconds))
    return bp
