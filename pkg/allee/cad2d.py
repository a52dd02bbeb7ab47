#!/usr/bin/env python3
"""
CAD2D - (0, A_max) × (0, 1/2) kutusunun bp'ye göre açık silindirik ayrışımı

Adımlar:
    1. Kutuda kökü olmadığı sertifikalanan faktörler atılır (a, b, b - 1/2 dahil).
    2. Kalanlar b'ye göre izdüşürülür; a-eksenindeki kritik değerler ayrılır.
    3. Her a-aralığından bir örnek a seçilir, faktörler orada b'de tek değişkenli olur,
       b-kökleri ayrılır ve her b-aralığından bir örnek alınır.

Örnek koordinatlar aralıktaki en küçük paydalı rasyoneldir (sürekli kesir).
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from config import constants
from core.elimination import cad_project
from core.polycore import MultiPoly, RatInterval, UniPoly, squarefree_part
from core.realroots import IsolatedRoot, bisect_root, cauchy_bound, isolate, separate
from allee.borderpoly import BorderPoly, has_no_root_in_box
from data_models import CellSample

logger = logging.getLogger(__name__)

BRange = Tuple[Fraction, Fraction]


def simplest_rational(lo: Fraction, hi: Fraction) -> Fraction:
    """
    Açık (lo, hi) aralığındaki en küçük paydalı rasyonel.

    Args:
        lo (Fraction): alt uç
        hi (Fraction): üst uç, lo < hi

    Returns:
        Fraction: lo < x < hi
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError(f"Boş aralık: ({lo}, {hi})")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_rational(-hi, -lo)
    n = math.floor(lo) + 1
    if n < hi:
        return Fraction(n)
    k = math.floor(lo)
    if lo == k:
        return k + Fraction(1, math.floor(1 / (hi - k)) + 1)
    return k + 1 / simplest_rational(1 / (hi - k), 1 / (lo - k))


def active_factors(bp: BorderPoly) -> List[MultiPoly]:
    """Kutuda kök taşıyabilecek faktörler; sertifikalı kök-suzlar ve kutu kenarları atılır."""
    if any(p.is_zero for p in bp.polys):
        raise ValueError(constants.ERROR_BP_ZERO_ON_BOX)
    return [p for p in bp.polys if not has_no_root_in_box(p)]


def project_factors(factors: Sequence[MultiPoly],
                    b_range: BRange = constants.DEFAULT_B_RANGE) -> List[UniPoly]:
    """
    a-eksenine izdüşüm: b'ye göre diskriminant/rezultant/baş katsayılar ve
    b-kenarlarındaki kısıtlamalar f(a, b_lo), f(a, b_hi).
    """
    if not factors:
        return []
    projection = [p for p in cad_project(factors, 'b') if p.degree > 0]
    for f in factors:
        if not f.occurs('b'):
            continue
        for edge in b_range:
            restricted = f.substitute({'b': Fraction(edge)})
            if restricted.occurs('a'):
                projection.append(squarefree_part(restricted.as_univariate('a')).primitive())
    return projection


def amax_bound(bp: BorderPoly) -> Fraction:
    """
    İzdüşüm polinomlarının tüm köklerinin altında kaldığı A_max.

    Cauchy sınırlarının en büyüğü (her biri 1 + max|c_i/c_d|); faktör yoksa 1.
    a > A_max bölgesi tek bir a-aralığı olarak örneklenir.
    """
    return projection_amax(project_factors(active_factors(bp)))


def projection_amax(projection: Sequence[UniPoly]) -> Fraction:
    """İzdüşüm polinomlarının Cauchy sınırlarının en büyüğü (en az 1)."""
    amax = max([Fraction(1)] + [cauchy_bound(p) for p in projection])
    logger.info(constants.LOG_MSG_AMAX.format(amax=amax))
    return amax


def _strictly_inside(root: IsolatedRoot, lo: Fraction, hi: Fraction) -> IsolatedRoot:
    while not root.exact and (root.interval.lo <= lo or root.interval.hi >= hi):
        root = bisect_root(root)
    return root


def gap_bounds(roots: Sequence[IsolatedRoot], lo: Fraction, hi: Fraction) -> List[Tuple[Fraction, Fraction]]:
    """
    Ayrık, sıralı köklerin (lo, hi) içinde bıraktığı açık aralıkların rasyonel iç parçaları.

    Her parça köklerin ayırıcı aralıklarının dışında kalır, yani tümüyle tek bir boşluktadır.

    Returns:
        List[Tuple[Fraction, Fraction]]: len(roots) + 1 aralık, artan sırada
    """
    ordered = [_strictly_inside(r, lo, hi) for r in roots]
    bounds = [lo] + [x for r in ordered for x in (r.interval.lo, r.interval.hi)] + [hi]
    return [(bounds[2 * i], bounds[2 * i + 1]) for i in range(len(ordered) + 1)]


def gap_samples(roots: Sequence[IsolatedRoot], lo: Fraction, hi: Fraction) -> List[Fraction]:
    """
    Ayrık, sıralı köklerin (lo, hi) içinde bıraktığı açık aralıklardan birer örnek.

    Returns:
        List[Fraction]: len(roots) + 1 örnek, artan sırada
    """
    return [simplest_rational(left, right) for left, right in gap_bounds(roots, lo, hi)]


def critical_a_values(projection: Sequence[UniPoly], amax: Fraction) -> List[IsolatedRoot]:
    domain = RatInterval(constants.DEFAULT_A_LOW, amax)
    roots: List[IsolatedRoot] = []
    for p in projection:
        roots.extend(isolate(p, domain))
    return separate(roots)


def b_roots(factors: Sequence[MultiPoly], a: Fraction, b_range: BRange) -> List[IsolatedRoot]:
    """a sabitken faktörlerin (b_lo, b_hi) içindeki ayrılmış b-kökleri."""
    domain = RatInterval(*b_range)
    roots: List[IsolatedRoot] = []
    for f in factors:
        if not f.occurs('b'):
            continue
        special = f.substitute({'a': a}).as_univariate('b')
        if special.degree > 0:
            roots.extend(isolate(special, domain))
    return separate(roots)


def _stack(args: Tuple[int, Fraction, List[MultiPoly], BRange]) -> List[CellSample]:
    i, a, factors, b_range = args
    samples = gap_samples(b_roots(factors, a, b_range), *b_range)
    return [CellSample(a=a, b=b, stack_index=(i, j), cell_id=f"c{i:03d}_{j:02d}")
            for j, b in enumerate(samples)]


def sample_cells(bp: BorderPoly, amax: Optional[Fraction] = None,
                 b_range: BRange = constants.DEFAULT_B_RANGE,
                 jobs: int = 1) -> List[CellSample]:
    """
    Kutunun bp ile ayrılan her açık bileşeni için en az bir rasyonel örnek nokta.

    Args:
        bp (BorderPoly): border polinomu
        amax (Fraction, optional): a kutusunun üst sınırı; None ise amax_bound
        b_range (Tuple[Fraction, Fraction]): b aralığı
        jobs (int): yığınlar için süreç sayısı

    Returns:
        List[CellSample]: (a-indeksi, b-indeksi) sırasında örnekler

    Raises:
        ValueError: bp'nin bir faktörü özdeş olarak sıfırsa
    """
    start = time.perf_counter()
    factors = active_factors(bp)
    projection = project_factors(factors, b_range)
    if amax is None:
        amax = projection_amax(projection)
    critical = critical_a_values(projection, amax)
    logger.info(constants.LOG_MSG_PROJECTION_DONE.format(
        count=len(projection), roots=len(critical), seconds=time.perf_counter() - start))

    a_samples = gap_samples(critical, constants.DEFAULT_A_LOW, amax)
    tasks = [(i, a, factors, b_range) for i, a in enumerate(a_samples)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            stacks = list(pool.map(_stack, tasks))
    else:
        stacks = [_stack(t) for t in tasks]
    cells = [cell for stack in stacks for cell in stack]
    logger.info(constants.LOG_MSG_STACKS_DONE.format(stacks=len(stacks), cells=len(cells)))
    return cells
