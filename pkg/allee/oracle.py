#!/usr/bin/env python3
"""
Oracle - Tam denge sistemi için sertifikalı aralık dal-sınır çözücü

Sabit rasyonel (a, b) noktasında [-δ, 2R]^n kutusu ikiye bölünerek taranır:
    - 0 ∉ F_i(X) ise kutu elenir,
    - Krawczyk operatörü K(X) ⊂ int(X) ise X'te tek kök vardır,
    - K(X) ∩ X = ∅ ise kök yoktur, aksi halde X daraltılır ve bölünür.

Aritmetik kesin rasyoneldir; uçlar 2^-bits ızgarasına dışa yuvarlanır. Yalnızca
J(m)^-1 ön koşullandırıcısı numpy ile kayan noktada hesaplanır (sonuç Fraction'a
birebir çevrilir, doğruluk buna bağlı değildir).
"""

import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import config, constants
from core.exceptions import OracleBudgetError
from core.polycore import MultiPoly, RatInterval
from allee.systems import allee_cubic, build_full, build_reduced
from data_models import CertifiedBox, OracleResult

logger = logging.getLogger(__name__)

Box = Tuple[RatInterval, ...]

UNIQUE = "unique"
EMPTY = "empty"
CONTRACT = "contract"
INCONCLUSIVE = "inconclusive"


def _power(iv: RatInterval, k: int) -> RatInterval:
    if k == 1:
        return iv
    if k % 2:
        return RatInterval(iv.lo ** k, iv.hi ** k)
    low, high = abs(iv.lo), abs(iv.hi)
    top = max(low, high) ** k
    if iv.contains_zero():
        return RatInterval(Fraction(0), top)
    return RatInterval(min(low, high) ** k, top)


@dataclass(frozen=True)
class CompiledPoly:
    """Sabit değişken sırasına göre derlenmiş polinom: (katsayı, ((indeks, üs), ...)) terimleri."""
    terms: Tuple[Tuple[Fraction, Tuple[Tuple[int, int], ...]], ...]

    @classmethod
    def compile(cls, poly: MultiPoly, variables: Sequence[str]) -> 'CompiledPoly':
        index = {v: i for i, v in enumerate(variables)}
        missing = [v for v in poly.variables if v not in index]
        if missing:
            raise ValueError(f"Derlenemeyen değişkenler: {missing}")
        terms = []
        for exp, coeff in poly.sorted_terms():
            powers = tuple((index[v], k) for v, k in zip(poly.variables, exp) if k)
            terms.append((coeff, powers))
        return cls(tuple(terms))

    def enclose(self, box: Box) -> RatInterval:
        total = RatInterval.point(0)
        for coeff, powers in self.terms:
            term = RatInterval.point(coeff)
            for i, k in powers:
                term = term * _power(box[i], k)
            total = total + term
        return total

    def at(self, point: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for coeff, powers in self.terms:
            value = coeff
            for i, k in powers:
                value *= point[i] ** k
            total += value
        return total


class CompiledSystem:
    """
    Kare polinom sistemi ve Jacobi matrisi.

    Attributes:
        variables (Tuple[str, ...]): bilinmeyenler
        permutation_invariant (bool): koordinat permütasyonları kökleri köklere taşır mı
        bits (int): dışa yuvarlama hassasiyeti
    """

    def __init__(self, equations: Sequence[MultiPoly], variables: Sequence[str],
                 permutation_invariant: bool = False, bits: Optional[int] = None):
        self.variables = tuple(variables)
        self.permutation_invariant = permutation_invariant
        self.bits = bits or config.oracle_precision_bits
        self.equations = [CompiledPoly.compile(p, self.variables) for p in equations]
        self.jacobian = [[CompiledPoly.compile(p.derivative(v), self.variables) for v in self.variables]
                         for p in equations]

    @property
    def dimension(self) -> int:
        return len(self.variables)

    def enclose(self, box: Box) -> List[RatInterval]:
        return [f.enclose(box).round_outward(self.bits) for f in self.equations]

    def at(self, point: Sequence[Fraction]) -> List[Fraction]:
        return [f.at(point) for f in self.equations]

    def jacobian_at(self, point: Sequence[Fraction]) -> np.ndarray:
        return np.array([[float(d.at(point)) for d in row] for row in self.jacobian], dtype=float)

    def jacobian_enclose(self, box: Box) -> List[List[RatInterval]]:
        return [[d.enclose(box).round_outward(self.bits) for d in row] for row in self.jacobian]

    def is_root(self, point: Sequence[Fraction]) -> bool:
        return all(v == 0 for v in self.at(point))


# -- kutu yardımcıları --------------------------------------------------------

def _width(box: Box) -> Fraction:
    return max(iv.width for iv in box)


def _bisect(box: Box) -> List[Box]:
    k = max(range(len(box)), key=lambda i: box[i].width)
    left, right = box[k].bisect()
    return [box[:k] + (left,) + box[k + 1:], box[:k] + (right,) + box[k + 1:]]


def _within(inner: Box, outer: Box) -> bool:
    return all(i.within(o) for i, o in zip(inner, outer))


def _disjoint(first: Box, second: Box) -> bool:
    return any(not f.overlaps(s) for f, s in zip(first, second))


def _swap(box: Box, i: int, j: int) -> Box:
    items = list(box)
    items[i], items[j] = items[j], items[i]
    return tuple(items)


def _meets_cone(box: Box) -> bool:
    """Kutu x_1 ≥ x_2 ≥ ... ≥ x_n koşulunu sağlayan bir nokta içeriyor mu."""
    previous = None
    for iv in box:
        value = iv.hi if previous is None else min(iv.hi, previous)
        if value < iv.lo:
            return False
        previous = value
    return True


def krawczyk(system: CompiledSystem, box: Box) -> Tuple[str, Box]:
    """
    K(X) = m - Y f(m) + (I - Y J(X)) (X - m), Y ≈ J(m)^-1.

    Returns:
        Tuple[str, Box]: (UNIQUE, K) | (EMPTY, X) | (CONTRACT, K ∩ X) | (INCONCLUSIVE, X)
    """
    m = tuple(iv.midpoint for iv in box)
    fm = system.at(m)
    try:
        inverse = np.linalg.inv(system.jacobian_at(m))
    except np.linalg.LinAlgError:
        return INCONCLUSIVE, box
    if not np.all(np.isfinite(inverse)):
        return INCONCLUSIVE, box
    y = [[Fraction(float(v)) for v in row] for row in inverse]
    jx = system.jacobian_enclose(box)
    k = len(box)
    image = []
    for i in range(k):
        center = m[i] - sum((y[i][j] * fm[j] for j in range(k)), Fraction(0))
        acc = RatInterval.point(center)
        for j in range(k):
            row = RatInterval.point(1 if i == j else 0)
            for l in range(k):
                if y[i][l]:
                    row = row - jx[l][j] * y[i][l]
            acc = acc + row * (box[j] - m[j])
        image.append(acc.round_outward(system.bits))
    if all(K.strictly_within(X) for K, X in zip(image, box)):
        return UNIQUE, tuple(image)
    meet = [K.intersect(X) for K, X in zip(image, box)]
    if any(iv is None for iv in meet):
        return EMPTY, box
    return CONTRACT, tuple(meet)


def tighten(system: CompiledSystem, box: Box, steps: int = constants.ORACLE_TIGHTEN_STEPS) -> Box:
    """Krawczyk yinelemesiyle kök kapsamını daraltır (kök kutuda kalır)."""
    for _ in range(steps):
        status, image = krawczyk(system, box)
        if status not in (UNIQUE, CONTRACT) or image == box:
            break
        box = image
    return box


@dataclass
class _Root:
    region: Box
    enclosure: Box


@dataclass
class SearchOutcome:
    roots: List[_Root]
    unresolved: List[Box]
    processed: int


def _record(system: CompiledSystem, roots: List[_Root], region: Box, enclosure: Box) -> Optional[bool]:
    """Yeni kökü ekler. True: eklendi, False: zaten kayıtlı, None: karar verilemedi."""
    candidate = _Root(region, tighten(system, enclosure))
    for _ in range(constants.ORACLE_CLUSTER_STEPS):
        pending = []
        for root in roots:
            if _within(candidate.enclosure, root.region) or _within(root.enclosure, candidate.region):
                return False
            if not _disjoint(candidate.enclosure, root.enclosure):
                pending.append(root)
        if not pending:
            roots.append(candidate)
            return True
        candidate.enclosure = tighten(system, candidate.enclosure)
        for root in pending:
            root.enclosure = tighten(system, root.enclosure)
    return None


def search(system: CompiledSystem, region: Box, budget: int, ordered: bool = False) -> SearchOutcome:
    """
    Bölgedeki tüm kökleri ayıran dal-sınır taraması.

    Args:
        system (CompiledSystem): çözülecek sistem
        region (Box): arama kutusu
        budget (int): işlenecek en fazla kutu
        ordered (bool): yalnızca x_1 ≥ ... ≥ x_n konisine değen kutular

    Returns:
        SearchOutcome: kökler (tekillik bölgesi + kapsam), çözülemeyen kutular, işlenen kutu sayısı
    """
    queue: List[Box] = [tuple(region)]
    roots: List[_Root] = []
    unresolved: List[Box] = []
    processed = 0
    while queue:
        if processed >= budget:
            unresolved.extend(queue)
            break
        box = queue.pop()
        processed += 1
        if ordered and not _meets_cone(box):
            continue
        if not all(f.contains_zero() for f in system.enclose(box)):
            continue
        if _width(box) <= constants.ORACLE_NEWTON_WIDTH:
            status, image = krawczyk(system, box)
            if status == EMPTY:
                continue
            if status == UNIQUE:
                if _record(system, roots, box, image) is None:
                    unresolved.append(box)
                continue
            # kök bir kenar üzerindeyse genişletilmiş kutu tekilliği kanıtlayabilir
            wider = tuple(iv.inflate(constants.ORACLE_INFLATION) for iv in box)
            wide_status, wide_image = krawczyk(system, wider)
            if wide_status == EMPTY:
                continue
            if wide_status == UNIQUE:
                if _record(system, roots, wider, wide_image) is None:
                    unresolved.append(box)
                continue
            if status == CONTRACT:
                box = image
        if _width(box) < constants.ORACLE_MIN_WIDTH:
            unresolved.append(box)
            continue
        queue.extend(_bisect(box))
    return SearchOutcome(roots, unresolved, processed)


# -- kök sınıflandırma -------------------------------------------------------

def _nonnegative(system: CompiledSystem, root: _Root) -> Optional[bool]:
    """Kök negatif olmayan ortantta mı; sıfır koordinatlı tek kök orijindir."""
    zero = tuple(Fraction(0) for _ in system.variables)
    if system.is_root(zero) and all(iv.contains_zero() for iv in root.region):
        return True
    for _ in range(constants.ORACLE_CLUSTER_STEPS):
        if any(iv.hi < 0 for iv in root.enclosure):
            return False
        if all(iv.lo > 0 for iv in root.enclosure):
            return True
        narrowed = tighten(system, root.enclosure)
        if narrowed == root.enclosure:
            return None
        root.enclosure = narrowed
    return None


def _same_coordinate(system: CompiledSystem, root: _Root, i: int, j: int) -> Optional[bool]:
    """x_i = x_j mi? Simetrik sistemde takas görüntüsü tekillik bölgesinde kalıyorsa eşittir."""
    for _ in range(constants.ORACLE_CLUSTER_STEPS):
        if not root.enclosure[i].overlaps(root.enclosure[j]):
            return False
        if system.permutation_invariant and _within(_swap(root.enclosure, i, j), root.region):
            return True
        narrowed = tighten(system, root.enclosure)
        if narrowed == root.enclosure:
            break
        root.enclosure = narrowed
    return None if system.permutation_invariant else True


def value_classes(system: CompiledSystem, root: _Root) -> Optional[List[List[int]]]:
    """Koordinatları eşit değer sınıflarına ayırır; karar verilemezse None."""
    n = system.dimension
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if find(i) == find(j):
                continue
            same = _same_coordinate(system, root, i, j)
            if same is None:
                return None
            if same:
                parent[find(j)] = find(i)
    groups: Dict[int, List[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _orbit_weight(system: CompiledSystem, root: _Root) -> Optional[int]:
    """Sıralı konideki kök için yörünge büyüklüğü; koni dışındaysa 0."""
    for i in range(system.dimension - 1):
        same = _same_coordinate(system, root, i, i + 1)
        if same is None:
            return None
        if not same and root.enclosure[i].hi < root.enclosure[i + 1].lo:
            return 0
    classes = value_classes(system, root)
    if classes is None:
        return None
    weight = math.factorial(system.dimension)
    for group in classes:
        weight //= math.factorial(len(group))
    return weight


# -- tam sistem ----------------------------------------------------------------

def full_equations(n: int, a: Fraction, b: Fraction,
                   thresholds: Optional[Sequence[Fraction]] = None) -> List[MultiPoly]:
    """
    (a, b) yerine konmuş tam sistem; thresholds verilirse her yamanın kendi eşiği b_i olur
    (Allee olmayan, simetrisi bozulmuş kontrol sistemi).
    """
    if thresholds is None:
        return [f.substitute({'a': a, 'b': b}) for f in build_full(n).equations]
    xs = [MultiPoly.var(f"x{i + 1}") for i in range(n)]
    total = MultiPoly.constant(0)
    for x in xs:
        total = total + x
    equations = []
    for x, threshold in zip(xs, thresholds):
        cubic = allee_cubic(x).substitute({'b': threshold})
        equations.append(cubic - x.scale(n * a) + total.scale(a))
    return equations


def default_region(n: int, bound: Optional[Fraction] = None) -> Box:
    bound = constants.ORACLE_STEADY_STATE_BOUND if bound is None else bound
    return tuple(RatInterval(-constants.ORACLE_REGION_MARGIN, 2 * bound) for _ in range(n))


def interval_solve_full(n: int, a: Fraction, b: Fraction, budget: Optional[int] = None,
                        symmetric: bool = False, bound: Optional[Fraction] = None,
                        thresholds: Optional[Sequence[Fraction]] = None) -> OracleResult:
    """
    Tam sistemin negatif olmayan denge noktalarının sertifikalı sayısı.

    Args:
        n (int): yama sayısı
        a (Fraction): bağlanma katsayısı
        b (Fraction): Allee eşiği
        budget (int, optional): işlenecek en fazla kutu (varsayılan config.oracle_budget)
        symmetric (bool): yalnızca sıralı kutuları tara, yörünge büyüklüğüyle çarp
        bound (Fraction, optional): R; arama bölgesi [-δ, 2R]^n
        thresholds (Sequence[Fraction], optional): yama başına eşikler (kontrol sistemi)

    Returns:
        OracleResult: count, complete ve sertifikalı kutular
    """
    if n > constants.ORACLE_MAX_COMPLETE_N:
        logger.warning(constants.ERROR_ORACLE_DIMENSION.format(limit=constants.ORACLE_MAX_COMPLETE_N, n=n))
    budget = config.oracle_budget if budget is None else budget
    bound = constants.ORACLE_STEADY_STATE_BOUND if bound is None else bound
    symmetric = symmetric and thresholds is None
    logger.info(constants.LOG_MSG_ORACLE_START.format(n=n, a=a, b=b, budget=budget))
    start = time.perf_counter()

    system = CompiledSystem(full_equations(n, a, b, thresholds), [f"x{i + 1}" for i in range(n)],
                            permutation_invariant=thresholds is None)
    outcome = search(system, default_region(n, bound), budget, ordered=symmetric)

    result = OracleResult(n=n, a=a, b=b, count=0, complete=not outcome.unresolved,
                          boxes_processed=outcome.processed, symmetric=symmetric)
    result.unresolved = [CertifiedBox(list(box), constants.BOX_UNRESOLVED) for box in outcome.unresolved]
    for root in outcome.roots:
        keep = _nonnegative(system, root)
        weight = 1
        if keep and symmetric:
            weight = _orbit_weight(system, root)
        if keep is None or weight is None:
            result.complete = False
            result.unresolved.append(CertifiedBox(list(root.region), constants.BOX_UNRESOLVED))
            continue
        if not keep or weight == 0:
            continue
        if any(iv.lo > bound for iv in root.enclosure):
            result.bound_violations += 1
            logger.warning(constants.LOG_MSG_ORACLE_BOUND_VIOLATION.format(
                box=[str(iv) for iv in root.enclosure]))
        result.count += weight
        result.boxes.append(CertifiedBox(list(root.enclosure), constants.BOX_UNIQUE_ROOT, weight))
    result.boxes.sort(key=lambda c: [iv.lo for iv in c.box])
    result.seconds = time.perf_counter() - start
    logger.info(constants.LOG_MSG_ORACLE_DONE.format(
        count=result.count, complete=result.complete, boxes=result.boxes_processed, seconds=result.seconds))
    return result


def verify_reduction(n: int, a: Fraction, b: Fraction, budget: Optional[int] = None,
                     thresholds: Optional[Sequence[Fraction]] = None) -> bool:
    """
    Her negatif olmayan denge noktasının koordinatları en fazla üç farklı değer alıyor mu.

    Simetrik sistemde eşitlik takas testiyle sertifikalanır; eşikleri bozulmuş sistemde
    ayrılamayan koordinatlar birleştirilir, bu yüzden üçten fazla sınıf kesin bir karşı örnektir.

    Raises:
        OracleBudgetError: çözücü tamamlanamadı ya da bir kümeleme kararsız kaldı
    """
    budget = config.oracle_budget if budget is None else budget
    system = CompiledSystem(full_equations(n, a, b, thresholds), [f"x{i + 1}" for i in range(n)],
                            permutation_invariant=thresholds is None)
    outcome = search(system, default_region(n), budget)
    if outcome.unresolved:
        raise OracleBudgetError(f"Oracle tamamlanamadı: {len(outcome.unresolved)} çözülemeyen kutu")
    for root in outcome.roots:
        keep = _nonnegative(system, root)
        if keep is None:
            raise OracleBudgetError("Kökün işareti belirlenemedi")
        if not keep:
            continue
        classes = value_classes(system, root)
        if classes is None:
            raise OracleBudgetError("Koordinat kümelemesi kararsız")
        if len(classes) > 3:
            logger.info(f"🔎 {len(classes)} farklı değerli denge noktası: {[str(iv) for iv in root.enclosure]}")
            return False
    return True


# -- indirgenmiş sistem (dejenere eliminasyon yedeği) ---------------------------

def count_reduced_by_oracle(multiplicities: Sequence[int], a: Fraction, b: Fraction,
                            budget: Optional[int] = None) -> Tuple[int, int]:
    """
    İndirgenmiş sistemin pozitif çözümlerini aralık çözücüyle sayar.

    Returns:
        Tuple[int, int]: (tüm pozitif çözümler, değerleri ikişer farklı olanlar)

    Raises:
        OracleBudgetError: çözücü tamamlanamadıysa
    """
    budget = config.oracle_budget if budget is None else budget
    sys = build_reduced(sum(multiplicities), multiplicities)
    equations = [f.substitute({'a': a, 'b': b}) for f in sys.equations]
    system = CompiledSystem(equations, sys.state_variables)
    outcome = search(system, default_region(len(sys.state_variables)), budget)
    if outcome.unresolved:
        raise OracleBudgetError(f"{sys.label}: {len(outcome.unresolved)} çözülemeyen kutu")
    total = off = 0
    for root in outcome.roots:
        keep = _nonnegative(system, root)
        if keep is None:
            raise OracleBudgetError(f"{sys.label}: kökün işareti belirlenemedi")
        if not keep or all(iv.contains_zero() for iv in root.region):
            continue
        total += 1
        classes = value_classes(system, root)
        if classes is not None and len(classes) == system.dimension:
            off += 1
    return total, off
