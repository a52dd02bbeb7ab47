#!/usr/bin/env python3
"""
Realroots - Sertifikalı reel kök izolasyonu, iyileştirme, sayma ve işaret belirleme

Birincil algoritma tamsayı katsayılar üzerinde Descartes işaret kuralı + ikiye bölme
(Vincent-Collins-Akritas). Sturm dizisi sayımı (sympy ``Poly.count_roots``) test
modunda bağımsız hakem olarak her çağrıda karşılaştırılır.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from config import config, constants
from core.exceptions import NotSquarefreeError, ZeroPolynomialError
from core.polycore import RatInterval, UniPoly, to_sympy_rational, uni_gcd, squarefree_part

logger = logging.getLogger(__name__)

Closed = Tuple[bool, bool]
OPEN: Closed = (False, False)
RATIONAL_TEST_MAX_BITS = 64


@dataclass(frozen=True)
class IsolatedRoot:
    """
    Karesiz bir polinomun tek bir reel kökü ve onu ayıran rasyonel aralık.

    Attributes:
        poly (UniPoly): karesiz tanım polinomu
        interval (RatInterval): kökü tam olarak bir tane içeren aralık; kesin rasyonel kökte nokta aralık
        parity (int): poly'nin interval.lo'daki işareti (kesin kökte 0)
    """
    poly: UniPoly
    interval: RatInterval
    parity: int

    @property
    def exact(self) -> bool:
        return self.interval.is_point

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise ValueError("Kök kesin rasyonel değil")
        return self.interval.lo

    def approx(self) -> float:
        return float(self.interval.midpoint)

    def to_dict(self) -> dict:
        return {
            'poly': str(self.poly),
            'lo': str(self.interval.lo),
            'hi': str(self.interval.hi),
            'exact': self.exact,
            'decimal': f"{self.approx():.15g}",
            'width': f"{float(self.interval.width):.3e}",
        }


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def cauchy_bound(p: UniPoly) -> Fraction:
    """Tüm köklerin mutlak değeri için kesin üst sınır: 1 + max |c_i / c_d|."""
    if p.is_zero:
        raise ZeroPolynomialError(constants.ERROR_ZERO_POLYNOMIAL.format(context='cauchy_bound'))
    lc = abs(p.leading_coefficient)
    ratio = max((abs(c) / lc for c in p.coefficients[:-1]), default=Fraction(0))
    return 1 + ratio


def positive_domain(p: UniPoly) -> RatInterval:
    """(0, ∞) sorgusunu sonlu (0, B) aralığına çevirir; B Cauchy sınırından büyüktür."""
    return RatInterval(Fraction(0), cauchy_bound(p) + 1)


def real_domain(p: UniPoly) -> RatInterval:
    bound = cauchy_bound(p) + 1
    return RatInterval(-bound, bound)


# -- tamsayı polinom yardımcıları (artan katsayılar) ------------------------

def _taylor_shift_one(coeffs: Sequence[int]) -> List[int]:
    """q(t) -> q(t + 1)."""
    c = list(coeffs)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += c[j + 1]
    return c


def _sign_variations(coeffs: Sequence[int]) -> int:
    count, last = 0, 0
    for v in coeffs:
        if v:
            s = 1 if v > 0 else -1
            if last and s != last:
                count += 1
            last = s
    return count


def _variations_unit(coeffs: Sequence[int]) -> int:
    """(0, 1) aralığındaki kök sayısı için Descartes üst sınırı."""
    return _sign_variations(_taylor_shift_one(list(reversed(coeffs))))


def _strip_content(coeffs: List[int]) -> List[int]:
    g = 0
    for v in coeffs:
        g = math.gcd(g, v)
        if g == 1:
            return coeffs
    return [v // g for v in coeffs] if g > 1 else coeffs


def _to_unit_interval(p: UniPoly, lo: Fraction, hi: Fraction) -> List[int]:
    """p(lo + (hi - lo) t) polinomunun tamsayı katsayıları."""
    width = hi - lo
    acc: List[Fraction] = []
    for c in reversed(p.coefficients):
        # acc <- acc * (lo + width t) + c
        nxt = [Fraction(0)] * (len(acc) + 1)
        for k, v in enumerate(acc):
            nxt[k] += v * lo
            nxt[k + 1] += v * width
        nxt[0] += c
        acc = nxt
    lcm = 1
    for v in acc:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in acc]
    while ints and ints[-1] == 0:
        ints.pop()
    return _strip_content(ints)


def descartes_bound(p: UniPoly, lo: Fraction, hi: Fraction) -> int:
    """Açık (lo, hi) aralığındaki kök sayısı için Descartes üst sınırı."""
    return _variations_unit(_to_unit_interval(p, lo, hi))


def _isolate_unit(coeffs: List[int]) -> Tuple[List[Tuple[int, int]], List[Fraction]]:
    """
    (0, 1) içindeki kökleri ayırır.

    Returns:
        ([(c, k), ...] aralıkları (c/2^k, (c+1)/2^k), [kesin ikili orta nokta kökleri])
    """
    intervals: List[Tuple[int, int]] = []
    exact: List[Fraction] = []
    stack = [(coeffs, 0, 0)]
    while stack:
        q, c, k = stack.pop()
        v = _variations_unit(q)
        if v == 0:
            continue
        if v == 1:
            intervals.append((c, k))
            continue
        d = len(q) - 1
        left = _strip_content([a << (d - i) for i, a in enumerate(q)])
        right = _taylor_shift_one(left)
        if right[0] == 0:
            exact.append(Fraction(2 * c + 1, 1 << (k + 1)))
            right = right[1:]
        stack.append((_strip_content(right), 2 * c + 1, k + 1))
        stack.append((left, 2 * c, k + 1))
    return intervals, exact


# -- kök aralıklarını düzenleme --------------------------------------------

def _side_sign(p: UniPoly, x: Fraction, right_side: bool) -> int:
    """p'nin x'in hemen sağındaki (ya da solundaki) işareti; x basit kök olabilir."""
    s = p.sign_at_rational(x)
    if s:
        return s
    ds = p.derivative().sign_at_rational(x)
    return ds if right_side else -ds


def _tighten(p: UniPoly, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    """(lo, hi) içinde tek kök varken uçları kök olmayan aralık döndürür (kök kesinse (r, r))."""
    while p.sign_at_rational(lo) == 0 or p.sign_at_rational(hi) == 0:
        mid = (lo + hi) / 2
        sm = p.sign_at_rational(mid)
        if sm == 0:
            return mid, mid
        if sm == _side_sign(p, lo, right_side=True):
            lo = mid
        else:
            hi = mid
    return lo, hi


def _rational_root_in(p: UniPoly, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    """Küçük paydalı rasyonel kökü yakalar: kök m/lc biçimindedir, aralık 1/lc'den dar olunca tek aday kalır."""
    ints = p.integer_coefficients
    lc = abs(ints[-1])
    if p.degree == 1:
        root = Fraction(-ints[0], ints[1])
        return (root, root) if lo < root < hi else (lo, hi)
    if lc.bit_length() > RATIONAL_TEST_MAX_BITS:
        return lo, hi
    step = Fraction(1, lc)
    s_lo = p.sign_at_rational(lo)
    while hi - lo >= step:
        mid = (lo + hi) / 2
        sm = p.sign_at_rational(mid)
        if sm == 0:
            return mid, mid
        if sm == s_lo:
            lo = mid
        else:
            hi = mid
    candidate = Fraction(math.ceil(lo * lc), lc)
    if lo < candidate < hi and p.sign_at_rational(candidate) == 0:
        return candidate, candidate
    return lo, hi


def _make_root(p: UniPoly, lo: Fraction, hi: Fraction) -> IsolatedRoot:
    if lo != hi:
        lo, hi = _tighten(p, lo, hi)
    if lo != hi:
        lo, hi = _rational_root_in(p, lo, hi)
    parity = 0 if lo == hi else p.sign_at_rational(lo)
    return IsolatedRoot(p, RatInterval(lo, hi), parity)


def is_squarefree(p: UniPoly) -> bool:
    if p.degree <= 1:
        return True
    return uni_gcd(p, p.derivative()).degree == 0


def isolate(p: UniPoly, domain: Optional[RatInterval] = None, closed: Closed = OPEN,
            check_squarefree: bool = True) -> List[IsolatedRoot]:
    """
    Karesiz p'nin domain içindeki tüm reel köklerini ayırır.

    Args:
        p (UniPoly): sıfır olmayan karesiz polinom
        domain (RatInterval, optional): arama aralığı; None ise tüm reel eksen (Cauchy sınırı)
        closed (Tuple[bool, bool]): alt/üst uç dahil mi (varsayılan açık aralık)
        check_squarefree (bool): karesizlik denetimi

    Returns:
        List[IsolatedRoot]: artan sırada, ikişer ayrık aralıklar; kesin rasyonel kökler nokta aralık

    Raises:
        ZeroPolynomialError: p sıfırsa
        NotSquarefreeError: p karesiz değilse
    """
    if p.is_zero:
        raise ZeroPolynomialError(constants.ERROR_ZERO_POLYNOMIAL.format(context='isolate'))
    if check_squarefree and not is_squarefree(p):
        raise NotSquarefreeError(constants.ERROR_NOT_SQUAREFREE.format(poly=p))
    if domain is None:
        domain = real_domain(p)
    if p.degree == 0:
        return []
    lo, hi = domain.lo, domain.hi
    roots: List[IsolatedRoot] = []
    if closed[0] and p.sign_at_rational(lo) == 0:
        roots.append(IsolatedRoot(p, RatInterval.point(lo), 0))
    if lo < hi:
        width = hi - lo
        intervals, exact = _isolate_unit(_to_unit_interval(p, lo, hi))
        for t in exact:
            x = lo + width * t
            roots.append(IsolatedRoot(p, RatInterval.point(x), 0))
        for c, k in intervals:
            scale = Fraction(1, 1 << k)
            roots.append(_make_root(p, lo + width * c * scale, lo + width * (c + 1) * scale))
    if closed[1] and hi != lo and p.sign_at_rational(hi) == 0:
        roots.append(IsolatedRoot(p, RatInterval.point(hi), 0))
    roots.sort(key=lambda r: (r.interval.lo, r.interval.hi))
    if config.cross_check:
        _cross_check(p, domain, closed, len(roots))
    return roots


def _cross_check(p: UniPoly, domain: RatInterval, closed: Closed, found: int) -> None:
    sturm = sturm_count(p, domain, closed)
    if sturm != found:
        logger.error(constants.LOG_MSG_CROSS_CHECK_FAILED.format(descartes=found, sturm=sturm, poly=p))
        raise AssertionError(constants.LOG_MSG_CROSS_CHECK_FAILED.format(descartes=found, sturm=sturm, poly=p))


def sturm_count(p: UniPoly, domain: RatInterval, closed: Closed = OPEN) -> int:
    """sympy'nin Sturm dizisi tabanlı sayımı; uçlar bayraklara göre düzeltilir."""
    sp = p.to_sympy()
    count = int(sp.count_roots(to_sympy_rational(domain.lo), to_sympy_rational(domain.hi)))
    if not closed[0] and p.sign_at_rational(domain.lo) == 0:
        count -= 1
    if not closed[1] and domain.hi != domain.lo and p.sign_at_rational(domain.hi) == 0:
        count -= 1
    return count


def refine(r: IsolatedRoot, width: Fraction) -> IsolatedRoot:
    """Aralığı width'e kadar ikiye bölerek daraltır; kesin kök aynen döner."""
    if r.exact or r.interval.width <= width:
        return r
    p = r.poly
    lo, hi = r.interval.lo, r.interval.hi
    s_lo = r.parity or p.sign_at_rational(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = p.sign_at_rational(mid)
        if sm == 0:
            return IsolatedRoot(p, RatInterval.point(mid), 0)
        if sm == s_lo:
            lo = mid
        else:
            hi = mid
    return IsolatedRoot(p, RatInterval(lo, hi), s_lo)


def bisect_root(r: IsolatedRoot) -> IsolatedRoot:
    return refine(r, r.interval.width / 2)


def sign_at(q: UniPoly, r: IsolatedRoot) -> int:
    """
    q'nun r ile temsil edilen reel cebirsel sayıdaki kesin işareti.

    Sıfır durumu gcd testiyle, diğerleri aralık iyileştirmesiyle belirlenir.
    """
    if q.is_zero:
        return 0
    if r.exact:
        return q.sign_at_rational(r.value)
    if q.degree <= 0:
        return _sign(q.leading_coefficient)
    g = uni_gcd(q, r.poly)
    if g.degree > 0:
        # g | r.poly ve aralıkta r.poly'nin tek kökü var: g'nin işaret değişimi = kök ortak
        if g.sign_at_rational(r.interval.lo) * g.sign_at_rational(r.interval.hi) < 0:
            return 0
    current = r
    while True:
        lo, hi = current.interval.lo, current.interval.hi
        if current.exact:
            return q.sign_at_rational(current.value)
        if q.sign_at_rational(lo) != 0 and q.sign_at_rational(hi) != 0 and descartes_bound(q, lo, hi) == 0:
            return q.sign_at_rational(current.interval.midpoint)
        current = bisect_root(current)


def count_in(p: UniPoly, domain: Optional[RatInterval] = None, closed: Closed = OPEN) -> int:
    """Aralıktaki farklı reel kök sayısı (katlılık yok sayılır)."""
    if p.is_zero:
        raise ZeroPolynomialError(constants.ERROR_ZERO_POLYNOMIAL.format(context='count_in'))
    if p.degree == 0:
        return 0
    sqf = squarefree_part(p)
    return len(isolate(sqf, domain if domain is not None else real_domain(sqf), closed, check_squarefree=False))


def separate(roots: List[IsolatedRoot]) -> List[IsolatedRoot]:
    """
    Farklı polinomlardan gelen kökleri birleştirir: ortak kökler tek kayda indirilir,
    kalan aralıklar kesin ayrık olana kadar iyileştirilir. Artan sırada döner.
    """
    result: List[IsolatedRoot] = []
    for root in roots:
        if any(_same_root(other, root) for other in result):
            continue
        for i, other in enumerate(result):
            if other.interval.overlaps(root.interval):
                result[i], root = _split_pair(other, root)
        result.append(root)
    return sorted(result, key=lambda r: r.interval.lo)


def _same_root(r1: IsolatedRoot, r2: IsolatedRoot) -> bool:
    if r1.exact and r2.exact:
        return r1.value == r2.value
    if r1.exact:
        return r2.interval.contains(r1.value) and r2.poly.sign_at_rational(r1.value) == 0
    if r2.exact:
        return r1.interval.contains(r2.value) and r1.poly.sign_at_rational(r2.value) == 0
    common = r1.interval.intersect(r2.interval)
    if common is None:
        return False
    g = uni_gcd(r1.poly, r2.poly)
    if g.degree <= 0:
        return False
    # g iki polinomu da böler; kesişimdeki kökü ancak iki kökün ortak değeri olabilir
    return len(isolate(g, common, closed=(True, True), check_squarefree=False)) > 0


def _split_pair(r1: IsolatedRoot, r2: IsolatedRoot) -> Tuple[IsolatedRoot, IsolatedRoot]:
    """Farklı olduğu bilinen iki kökün aralıklarını ayrık olana kadar daraltır."""
    while r1.interval.overlaps(r2.interval):
        if r1.exact and r2.exact:
            break
        if not r1.exact and (r2.exact or r1.interval.width >= r2.interval.width):
            r1 = bisect_root(r1)
        else:
            r2 = bisect_root(r2)
    return r1, r2
