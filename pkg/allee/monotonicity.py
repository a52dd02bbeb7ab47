#!/usr/bin/env python3
"""
Monotonicity - n = 4, G1(2, 2) border polinomunun iki küçük faktörü için a-monotonluk sertifikaları

g1 ve g2'nin a'ya göre artan olması, b = 1/2'deki kökleriyle birlikte a ≥ 7/100 bölgesinde
border eğrisi olmadığını gösterir; bu yüzden n = 4 şekilleri (0, 0.07) aralığında çizilir.
"""

import logging
from fractions import Fraction
from typing import Tuple

from config import constants
from core.polycore import MultiPoly, RatInterval, squarefree_part
from core.realroots import IsolatedRoot, count_in, isolate, real_domain, refine

logger = logging.getLogger(__name__)

A = MultiPoly.var('a')
B = MultiPoly.var('b')

REMARK_AMAX = Fraction(7, 100)


def remark_factors() -> Tuple[MultiPoly, MultiPoly]:
    """
    Returns:
        Tuple[MultiPoly, MultiPoly]: (g1, g2), basılı katsayılarla
    """
    q = Fraction(1, 4)
    g1 = (A ** 3).scale(216) - (A ** 2 * B ** 2).scale(36) + (A * B ** 4).scale(2) + (A ** 2 * B).scale(36) \
        - (A * B ** 3).scale(4) - (A ** 2).scale(36) + (A * B ** 2).scale(6) - (B ** 4).scale(q) \
        - (A * B).scale(4) + (B ** 3).scale(Fraction(1, 2)) + A.scale(2) - (B ** 2).scale(q)
    g2 = B ** 2 + A.scale(4) - B
    return g1, g2


def g1_second_derivative_zero() -> MultiPoly:
    """
    ∂²g1/∂a² = 0 eğrisi a = (b² - b + 1)/18; yerine koyarak doğrulanır.

    Raises:
        ArithmeticError: yerine koyma sıfır vermezse
    """
    g1, _ = remark_factors()
    curve = (B ** 2 - B + 1).scale(Fraction(1, 18))
    if not g1.derivative('a').derivative('a').substitute({'a': curve}).is_zero:
        raise ArithmeticError("∂²g1/∂a² eğri üzerinde sıfır değil")
    return curve


def certify_g1_increasing() -> bool:
    """
    ∂g1/∂a ≥ 0 (a > 0, 0 < b < 1/2).

    ∂²g1/∂a² a'da doğrusal ve artan; dolayısıyla ∂g1/∂a'nın a'ya göre tek minimumu
    ∂²g1/∂a² = 0 eğrisindedir ve orada ∂g1/∂a özdeş sıfırdır.
    """
    g1, _ = remark_factors()
    first = g1.derivative('a')
    second = first.derivative('a')
    if second.degree('a') != 1 or second.leading_coefficient('a').constant_value <= 0:
        return False
    on_curve = first.substitute({'a': g1_second_derivative_zero()})
    # aynı sonuç kapalı biçimde: ∂g1/∂a = 2 (18a - (b² - b + 1))²
    closed_form = (A.scale(18) - (B ** 2 - B + 1)) ** 2
    return on_curve.is_zero and first == closed_form.scale(2)


def remark_roots(b: Fraction = Fraction(1, 2)) -> Tuple[IsolatedRoot, IsolatedRoot]:
    """
    g1(a, b) ve g2(a, b)'nin (verilen b için) tek reel kökleri.

    Returns:
        Tuple[IsolatedRoot, IsolatedRoot]: g1 ve g2 kökleri (b = 1/2'de 1/24 ve 1/16)

    Raises:
        ValueError: polinomlardan biri b'de tek reel köke sahip değilse
    """
    roots = []
    for g in remark_factors():
        special = squarefree_part(g.substitute({'b': b}).as_univariate('a'))
        found = isolate(special, real_domain(special))
        if len(found) != 1:
            raise ValueError(f"b={b} için {len(found)} reel kök: {special}")
        roots.append(refine(found[0], constants.DEFAULT_REFINE_WIDTH))
    logger.debug(f"b={b}: g1 kökü ≈ {roots[0].approx():.6f}, g2 kökü ≈ {roots[1].approx():.6f}")
    return roots[0], roots[1]


def no_border_beyond(amax: Fraction = REMARK_AMAX) -> bool:
    """
    a ≥ amax, 0 < b < 1/2 bölgesinde g1 ve g2 sıfır olmaz.

    Her ikisi de a'ya göre artan olduğundan g(a, b) ≥ g(amax, b); ikincisinin [0, 1/2]
    üzerinde kökü olmadığı ve pozitif olduğu kesin olarak gösterilir.
    """
    g1, g2 = remark_factors()
    g2_rate = g2.derivative('a')
    if not certify_g1_increasing() or not (g2_rate.is_constant and g2_rate.constant_value > 0):
        return False
    b_range = RatInterval(constants.DEFAULT_B_LOW, constants.DEFAULT_B_HIGH)
    for g in (g1, g2):
        edge = g.substitute({'a': amax}).as_univariate('b')
        if count_in(edge, b_range, closed=(True, True)) or edge.sign_at_rational(Fraction(1, 4)) <= 0:
            return False
    return True
