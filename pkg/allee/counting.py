#!/usr/bin/env python3
"""
Counting - Rasyonel (a, b) noktasında kesin pozitif çözüm sayımı ve toplamın montajı

İndirgenmiş sistemlerin eliminantları (``allee.systems``) noktada özelleştirilir,
pozitif kökleri ayrılır ve yan koşulların işaretleri kesin olarak belirlenir.
Tam sistemin denge noktası sayısı bölüntü sayımlarından iki modda kurulur:
    - dedup: her denge noktası tam bir kez sayılır (yetkili çıktı),
    - paper: kapalı formül harfiyen, raporlama geleneğindeki c değerleriyle.
"""

import logging
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from config import config, constants
from core.exceptions import (
    DegenerateEliminationError,
    MissingPartitionError,
    NonGenericPointError,
)
from core.polycore import MultiPoly, UniPoly, uni_gcd
from core.realroots import IsolatedRoot, is_squarefree, isolate, positive_domain, sign_at
from allee.borderpoly import bp_total
from allee.cad2d import amax_bound, sample_cells
from allee.oracle import count_reduced_by_oracle, interval_solve_full
from allee.systems import Eliminant, eliminant, partitions
from data_models import CellSample, ClassificationReport, ReducedCount, TotalCount

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _eliminant(multiplicities: Tuple[int, ...]) -> Eliminant:
    return eliminant(multiplicities)


def stabilizer_size(multiplicities: Sequence[int]) -> int:
    """Çokluk demetini sabit bırakan permütasyon sayısı, örn. (2, 1, 1) -> 2."""
    mults = tuple(multiplicities)
    return sum(1 for perm in permutations(range(len(mults)))
               if all(mults[i] == mults[p] for i, p in enumerate(perm)))


def multinomial(n: int, parts: Sequence[int]) -> int:
    result, rest = 1, n
    for part in parts:
        result *= math.comb(rest, part)
        rest -= part
    return result


def _check_point(a: Fraction, b: Fraction) -> None:
    if not (a > 0 and 0 < b < Fraction(1, 2)):
        raise NonGenericPointError(constants.ERROR_OUTSIDE_BOX.format(a=a, b=b))


def _specialize(poly: MultiPoly, a: Fraction, b: Fraction) -> UniPoly:
    return poly.substitute({'a': a, 'b': b}).as_univariate('y')


def _non_generic(a: Fraction, b: Fraction, reason: str) -> NonGenericPointError:
    return NonGenericPointError(constants.ERROR_NON_GENERIC.format(a=a, b=b, reason=reason))


def _valid_roots(e: Eliminant, a: Fraction, b: Fraction) -> Tuple[List[IsolatedRoot], List[IsolatedRoot]]:
    """
    Çekirdeğin pozitif kökleri: (pozitiflik koşullarını sağlayanlar, bunların ayrık olanları).

    Raises:
        DegenerateEliminationError: çekirdek noktada özdeş sıfırsa
        NonGenericPointError: çekirdek karesiz değil ya da bir yan koşulla ortak kökü var
    """
    core = _specialize(e.core, a, b)
    if core.is_zero:
        raise DegenerateEliminationError(constants.ERROR_DEGENERATE_ELIMINATION.format(system=e.system.label))
    if not is_squarefree(core):
        raise _non_generic(a, b, f"{e.system.label} çekirdeğinin katlı kökü var")
    if core.evaluate(0) == 0:
        raise _non_generic(a, b, f"{e.system.label} çekirdeği y = 0'da sıfır")
    sides = {name: _specialize(p, a, b) for name, p in e.side_conditions}
    for name, side in sides.items():
        if side.is_zero or uni_gcd(core, side).degree > 0:
            raise _non_generic(a, b, f"{e.system.label} çekirdeği ile '{name}' ortak köke sahip")
    if core.degree == 0:
        return [], []
    valid = [r for r in isolate(core, positive_domain(core), check_squarefree=False)
             if all(sign_at(sides[name], r) > 0 for name, _ in e.positivity)]
    distinct = [r for r in valid if all(sign_at(sides[name], r) != 0 for name, _ in e.distinctness)]
    return valid, distinct


def _finish(multiplicities: Tuple[int, ...], total: int, off: int, method: str) -> ReducedCount:
    orbits = off // stabilizer_size(multiplicities)
    paper_c = off if len(multiplicities) == 2 else orbits
    return ReducedCount(multiplicities, total, off, orbits, paper_c, method)


def _oracle_fallback(multiplicities: Tuple[int, ...], a: Fraction, b: Fraction) -> ReducedCount:
    logger.warning(constants.LOG_MSG_ORACLE_FALLBACK.format(system=multiplicities))
    total, off = count_reduced_by_oracle(multiplicities, a, b)
    return _finish(multiplicities, total, off, "oracle")


def count_G1(a: Fraction, b: Fraction, n: int, n1: int, n2: int) -> ReducedCount:
    """
    G1(n1, n2) sisteminin (a, b)'deki pozitif çözümleri.

    z = y - h(y)/(a n2) ile P(y) = h(y) Q(y) elde edilir; h'nin pozitif kökleri b ve 1
    köşegen çözümleri (y = z) verir, Q'nun z(y) > 0 olan pozitif kökleri köşegen dışıdır.

    Args:
        a (Fraction): a > 0
        b (Fraction): 0 < b < 1/2
        n (int): yama sayısı, n1 + n2
        n1 (int): y çokluğu
        n2 (int): z çokluğu

    Returns:
        ReducedCount: total_positive, off_diagonal, orbits, paper_c

    Raises:
        NonGenericPointError: nokta kutu dışında ya da bp_G1(n1, n2) noktada sıfır
    """
    _check_point(a, b)
    if n1 + n2 != n:
        raise MissingPartitionError(constants.ERROR_MISSING_PARTITION.format(partition=(n1, n2)))
    mults = (n1, n2)
    # y çokluğu büyük olan değer; (n2, n1) sistemi takasla aynı çözümleri verir
    ordered = (max(mults), min(mults))
    try:
        _, distinct = _valid_roots(_eliminant(ordered), a, b)
    except DegenerateEliminationError:
        return _oracle_fallback(mults, a, b)
    off = len(distinct)
    # y = z = b ve y = z = 1 her jenerik noktada çözüm
    total = off + 2
    logger.debug(constants.LOG_MSG_COUNT_POINT.format(
        a=a, b=b, kind="G1", multiplicities=mults, total=total, off=off))
    return _finish(mults, total, off, "elimination")


def count_G2(a: Fraction, b: Fraction, n: int, n1: int, n2: int, n3: int) -> ReducedCount:
    """
    G2(n1, n2, n3) sisteminin pozitif çözümleri.

    Değerleri ikişer farklı çözümler eliminanttan sayılır. İki değerin çakıştığı çözümler
    ilgili birleşik G1 sistemlerinin köşegen dışı çözümleridir; üçü eşitse y ∈ {b, 1}.
    """
    _check_point(a, b)
    if n1 + n2 + n3 != n:
        raise MissingPartitionError(constants.ERROR_MISSING_PARTITION.format(partition=(n1, n2, n3)))
    mults = (n1, n2, n3)
    e = _eliminant(mults)
    try:
        _, distinct = _valid_roots(e, a, b)
    except DegenerateEliminationError:
        return _oracle_fallback(mults, a, b)
    off = len(distinct) * e.solutions_per_root
    merged = 0
    for pair in ((n1 + n2, n3), (n1 + n3, n2), (n1, n2 + n3)):
        merged += count_G1(a, b, n, *pair).off_diagonal
    total = off + merged + 2
    logger.debug(constants.LOG_MSG_COUNT_POINT.format(
        a=a, b=b, kind="G2", multiplicities=mults, total=total, off=off))
    return _finish(mults, total, off, "elimination")


def count_partition(a: Fraction, b: Fraction, n: int, multiplicities: Sequence[int]) -> ReducedCount:
    mults = tuple(multiplicities)
    if len(mults) == 2:
        return count_G1(a, b, n, *mults)
    return count_G2(a, b, n, *mults)


# -- montaj --------------------------------------------------------------------

def _paper_literal(n: int, counts: Dict[Tuple[int, ...], ReducedCount]) -> int:
    total = constants.TRIVIAL_STEADY_STATES
    for mults, c in counts.items():
        if len(mults) == 2:
            total += c.paper_c * math.comb(n, mults[0])
        else:
            total += c.paper_c * math.comb(n, mults[0]) * math.comb(n - mults[0], mults[1])
    return total


def _dedup(n: int, counts: Dict[Tuple[int, ...], ReducedCount]) -> int:
    total = constants.TRIVIAL_STEADY_STATES
    for mults, c in counts.items():
        total += c.off_diagonal * multinomial(n, mults) // stabilizer_size(mults)
    return total


def _printed(counts: Dict[Tuple[int, ...], ReducedCount]) -> Optional[int]:
    """Basılı binom katsayılarıyla (yalnızca n = 4) toplam."""
    if set(counts) != set(constants.PRINTED_BINOMIALS):
        return None
    return constants.TRIVIAL_STEADY_STATES + sum(
        counts[m].paper_c * k for m, k in constants.PRINTED_BINOMIALS.items())


def assemble_total(n: int, counts: Sequence[ReducedCount],
                   mode: str = constants.FORMULA_MODE_DEDUP) -> TotalCount:
    """
    Bölüntü sayımlarından tam sistemin denge noktası sayısı.

    dedup: 3 + Σ_pairs off·C(n, n1)/|stab| + Σ_triples off·multinomial/|stab|
    paper: 3 + Σ c1·C(n, n1) + Σ c2·C(n, n1)·C(n - n1, n2)

    Args:
        n (int): yama sayısı
        counts (Sequence[ReducedCount]): tüm bölüntülerin sayımları
        mode (str): "dedup" veya "paper"

    Returns:
        TotalCount: seçilen moddaki toplam ve alternatifler

    Raises:
        MissingPartitionError: bir bölüntünün sayımı eksikse
        ValueError: mod bilinmiyorsa
    """
    if mode not in constants.FORMULA_MODES:
        raise ValueError(constants.ERROR_UNKNOWN_MODE.format(mode=mode))
    by_mults = {tuple(c.multiplicities): c for c in counts}
    for mults in partitions(n).all():
        if mults not in by_mults:
            raise MissingPartitionError(constants.ERROR_MISSING_PARTITION.format(partition=mults))

    alternatives = {
        constants.FORMULA_MODE_DEDUP: _dedup(n, by_mults),
        constants.FORMULA_MODE_PAPER: _paper_literal(n, by_mults),
    }
    note = ""
    printed = _printed(by_mults) if n == 4 else None
    if printed is not None:
        alternatives['printed'] = printed
        note = constants.DISCREPANCY_NOTE.format(
            printed=printed, claimed=constants.CLAIMED_TOTAL,
            literal=alternatives[constants.FORMULA_MODE_PAPER],
            dedup=alternatives[constants.FORMULA_MODE_DEDUP])
    ordered = [by_mults[m] for m in partitions(n).all()]
    return TotalCount(n=n, counts=ordered, assembled_total=alternatives[mode],
                      formula_mode=mode, alternatives=alternatives, note=note)


def count_all(n: int, a: Fraction, b: Fraction, mode: Optional[str] = None) -> TotalCount:
    """(a, b)'de tüm bölüntüleri sayıp toplamı kurar."""
    _check_point(a, b)
    mode = mode or config.formula_mode
    counts = [count_partition(a, b, n, m) for m in partitions(n).all()]
    return assemble_total(n, counts, mode)


def _count_cell(args: Tuple[int, Fraction, Fraction, str]) -> TotalCount:
    n, a, b, mode = args
    return count_all(n, a, b, mode)


# -- sınıflandırma ---------------------------------------------------------------

def _oracle_checks(n: int, cells: List[CellSample], k: int, budget: Optional[int],
                   seed: int) -> List[Dict[str, object]]:
    if k <= 0 or n > constants.ORACLE_MAX_COMPLETE_N:
        return []
    rng = random.Random(seed)
    chosen = sorted(rng.sample(range(len(cells)), min(k, len(cells))))
    checks = []
    for i in chosen:
        cell = cells[i]
        result = interval_solve_full(n, cell.a, cell.b, budget=budget)
        dedup = cell.total.alternatives[constants.FORMULA_MODE_DEDUP]
        cell.oracle_count = result.count if result.complete else None
        logger.info(constants.LOG_MSG_ORACLE_CHECK.format(cell_id=cell.cell_id, oracle=result.count, dedup=dedup))
        checks.append({
            'cell_id': cell.cell_id,
            'oracle': result.count,
            'dedup': dedup,
            'complete': result.complete,
            'agree': result.complete and result.count == dedup,
        })
    return checks


def classify(n: int, amax: Optional[Fraction] = None, mode: Optional[str] = None, jobs: int = 1,
             cache_dir: Optional[str] = None, prune: bool = True, oracle_check: int = 0,
             budget: Optional[int] = None, seed: int = 0,
             b_range: Tuple[Fraction, Fraction] = constants.DEFAULT_B_RANGE
             ) -> ClassificationReport:
    """
    bp_total(n) -> sample_cells -> hücre başına sayım -> rapor.

    Args:
        n (int): yama sayısı
        amax (Fraction, optional): a kutusu; None ise amax_bound
        mode (str, optional): toplam modu (varsayılan config.formula_mode)
        jobs (int): paralel süreç sayısı
        cache_dir (str, optional): bp cache dizini
        prune (bool): kutuda kökü olmayan faktörleri ayır
        oracle_check (int): oracle ile karşılaştırılacak rastgele hücre sayısı (n ≤ 4)
        budget (int, optional): oracle kutu bütçesi
        seed (int): hücre seçimi için tohum
        b_range (Tuple[Fraction, Fraction]): b aralığı, (0, 1/2) içinde

    Returns:
        ClassificationReport: hücreler, sayımlar ve özet
    """
    mode = mode or config.formula_mode
    seconds: Dict[str, float] = {}
    start = time.perf_counter()
    bp = bp_total(n, cache_dir=cache_dir, prune=prune, jobs=jobs)
    seconds['bp'] = time.perf_counter() - start

    step = time.perf_counter()
    if amax is None:
        amax = amax_bound(bp)
    cells = sample_cells(bp, amax, b_range=b_range, jobs=jobs)
    seconds['cad'] = time.perf_counter() - step

    step = time.perf_counter()
    logger.info(constants.LOG_MSG_COUNT_START.format(cells=len(cells), jobs=jobs))
    tasks = [(n, c.a, c.b, mode) for c in cells]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            totals = list(pool.map(_count_cell, tasks))
    else:
        totals = [_count_cell(t) for t in tasks]
    for cell, total in zip(cells, totals):
        cell.total = total
    seconds['count'] = time.perf_counter() - step

    report = ClassificationReport(
        n=n,
        amax=amax,
        factors=[f.to_dict() for f in bp.factors],
        cells=cells,
        formula_mode=mode,
        partitions=partitions(n).to_dict(),
        seconds=seconds,
    )
    step = time.perf_counter()
    report.oracle_checks = _oracle_checks(n, cells, oracle_check, budget, seed)
    seconds['oracle'] = time.perf_counter() - step
    logger.info(constants.LOG_MSG_COUNT_DONE.format(
        totals=report.summary()['distinct_totals'], seconds=time.perf_counter() - start))
    return report
