#!/usr/bin/env python3
"""
Rezultant, diskriminant, ikişer asal taban ve CAD izdüşümü testleri
"""

from fractions import Fraction

import pytest
import sympy

from core.elimination import (cad_project, coprime_base, coprime_base_tagged, discriminant,
                              resultant, subresultant_coefficients)
from core.exceptions import EliminationError
from core.polycore import MultiPoly, UniPoly, divides, to_rational

A = MultiPoly.var('a')
B = MultiPoly.var('b')
Y = MultiPoly.var('y')


def test_resultant_of_linear_forms():
    """Res_y(y - a, y - b) = ±(a - b)"""
    res = resultant(Y - A, Y - B, 'y')
    assert res == (A - B).primitive()


def test_resultant_vanishes_on_common_root():
    f = Y ** 2 - A
    g = Y - B
    res = resultant(f, g, 'y', normalize=False)
    assert res.substitute({'a': Fraction(9, 4), 'b': Fraction(3, 2)}).is_zero
    assert not res.substitute({'a': 2, 'b': 1}).is_zero


def test_resultant_requires_variable():
    with pytest.raises(EliminationError):
        resultant(A, B, 'y')


def test_resultant_trace_keeps_subresultants():
    trace = resultant(Y ** 2 - A, Y ** 2 - B, 'y', trace=True)
    assert divides(A - B, trace.resultant)
    assert trace.psc


def test_discriminant_of_allee_quadratic():
    """disc_b(b^2 - b + 4a) = 1 - 16a"""
    d = discriminant(B ** 2 - B + A.scale(4), 'b')
    assert d == 1 - A.scale(16)
    assert discriminant(B ** 2 - B + A.scale(4), 'b', normalize=True) == A.scale(16) - 1


def test_discriminant_of_cubic_at_half():
    """y(1 - y)(y - 1/2): üç farklı kök, diskriminant sıfırdan farklı"""
    f = (Y * (1 - Y) * (Y - B)).substitute({'b': Fraction(1, 2)})
    assert not discriminant(f, 'y').is_zero
    double = (Y - A) ** 2
    assert discriminant(double, 'y').is_zero


def test_subresultant_coefficients_start_with_resultant():
    psc = subresultant_coefficients(Y ** 3 - A, Y ** 2 - B, 'y')
    assert divides(resultant(Y ** 3 - A, Y ** 2 - B, 'y'), psc[0])


def test_coprime_base_splits_common_factors():
    f = (B - A) * (B + 1)
    g = (B - A) * (B - 2)
    base = coprime_base([f, g, (B + 1) ** 2])
    assert sorted(str(p) for p in base) == sorted(str(p.primitive()) for p in [B - A, B + 1, B - 2])


def test_coprime_base_tagged_merges_tags():
    base = coprime_base_tagged([((B - A) * B, ['jac']), (B - A, ['edge'])])
    tags = {str(p): set(t) for p, t, _ in base}
    assert tags[str((B - A).primitive())] == {'jac', 'edge'}
    assert tags[str(B)] == {'jac'}


def test_cad_project_single_parabola():
    """b^2 + 4a - b: baş katsayı sabit, diskriminant 16a - 1"""
    projection = cad_project([B ** 2 + A.scale(4) - B], 'b')
    assert projection == [UniPoly('a', (-1, 16))]


def test_cad_project_pair_adds_resultant():
    projection = cad_project([B - A, B - Fraction(1, 4)], 'b')
    assert [p.degree for p in projection] == [1]
    assert projection[0].evaluate(Fraction(1, 4)) == 0


def test_cad_project_rejects_empty():
    with pytest.raises(ValueError):
        cad_project([], 'b')


def random_in_y(rng, degree: int) -> MultiPoly:
    """y'de verilen derecede, baş katsayısı sıfırdan farklı tamsayı; diğer katsayılar a, b'de doğrusal."""
    p = MultiPoly.constant(rng.choice([-3, -2, -1, 1, 2, 3])) * Y ** degree
    for k in range(degree):
        c = rng.randint(-4, 4) + rng.randint(-3, 3) * A + rng.randint(-3, 3) * B
        p = p + c * Y ** k
    return p


def check_resultant_commutes_with_substitution(rng, cases: int) -> None:
    for _ in range(cases):
        f = random_in_y(rng, rng.randint(1, 3))
        g = random_in_y(rng, rng.randint(1, 3))
        point = {'a': Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                 'b': Fraction(rng.randint(-9, 9), rng.randint(1, 5))}
        res = resultant(f, g, 'y', normalize=False)
        fs = f.substitute(point).as_univariate('y').to_sympy()
        gs = g.substitute(point).as_univariate('y').to_sympy()
        assert res.substitute(point).constant_value == to_rational(sympy.sympify(fs.resultant(gs)))


def test_resultant_commutes_with_substitution(rng):
    check_resultant_commutes_with_substitution(rng, 30)


@pytest.mark.slow
def test_resultant_commutes_with_substitution_many(rng):
    check_resultant_commutes_with_substitution(rng, 200)
