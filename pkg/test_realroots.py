#!/usr/bin/env python3
"""
Reel kök izolasyonu testleri (Descartes + Sturm çapraz kontrolü açık)
"""

from fractions import Fraction

import pytest

from core.exceptions import NotSquarefreeError, ZeroPolynomialError
from core.polycore import RatInterval, UniPoly, to_sympy_rational
from core.realroots import (cauchy_bound, count_in, isolate, refine, separate, sign_at,
                            sturm_count)


def cubic(b: Fraction) -> UniPoly:
    """y(1 - y)(y - b)"""
    return UniPoly.from_roots('y', [0, 1, b], scale=-1)


def test_isolates_allee_cubic_roots_on_closed_interval():
    roots = isolate(cubic(Fraction(1, 4)), RatInterval(0, 2), closed=(True, True))
    assert [r.value for r in roots] == [0, Fraction(1, 4), 1]
    assert all(r.exact for r in roots)


def test_open_interval_excludes_endpoints():
    roots = isolate(cubic(Fraction(1, 4)), RatInterval(0, 1))
    assert [r.value for r in roots] == [Fraction(1, 4)]


def test_linear_root():
    roots = isolate(UniPoly('a', (Fraction(-1, 4), 4)), RatInterval(0, 1))
    assert len(roots) == 1
    assert roots[0].value == Fraction(1, 16)


def test_irrational_roots_are_disjoint_and_refinable():
    """y^2 - 2: iki irrasyonel kök"""
    p = UniPoly('y', (-2, 0, 1))
    roots = isolate(p)
    assert len(roots) == 2
    assert not roots[0].interval.overlaps(roots[1].interval)
    fine = refine(roots[1], Fraction(1, 10 ** 9))
    assert fine.interval.width <= Fraction(1, 10 ** 9)
    assert fine.interval.lo ** 2 < 2 < fine.interval.hi ** 2


def test_requires_squarefree_input():
    with pytest.raises(NotSquarefreeError):
        isolate(UniPoly.from_roots('y', [1, 1]))
    with pytest.raises(ZeroPolynomialError):
        isolate(UniPoly('y', ()))


def test_sign_at_algebraic_point():
    """sqrt(2)'de y - 3/2 negatif, y^2 - 2 sıfır, y - 1 pozitif"""
    p = UniPoly('y', (-2, 0, 1))
    root = isolate(p, RatInterval(0, 2))[0]
    assert sign_at(UniPoly('y', (Fraction(-3, 2), 1)), root) == -1
    assert sign_at(UniPoly('y', (-1, 1)), root) == 1
    assert sign_at(p * UniPoly('y', (5, 1)), root) == 0


def test_count_in_ignores_multiplicity():
    p = UniPoly.from_roots('y', [Fraction(1, 3), Fraction(1, 3), 2])
    assert count_in(p, RatInterval(0, 3)) == 2
    assert count_in(p, RatInterval(0, 1)) == 1
    assert sturm_count(UniPoly.from_roots('y', [Fraction(1, 3), 2]), RatInterval(0, 3)) == 2


def test_separate_merges_common_roots():
    p = UniPoly.from_roots('y', [Fraction(1, 2), 3])
    q = UniPoly('y', (-2, 0, 4, 0, -1))
    q_roots = isolate(q * UniPoly('y', (-1, 2)), RatInterval(0, 4))
    merged = separate(isolate(p, RatInterval(0, 4)) + q_roots)
    values = [r.approx() for r in merged]
    assert len(merged) == len(set(round(v, 9) for v in values))
    assert sorted(values) == values
    for first, second in zip(merged, merged[1:]):
        assert first.interval.hi < second.interval.lo or (first.exact and second.exact)


def test_cauchy_bound_dominates_roots():
    p = UniPoly.from_roots('y', [-5, Fraction(1, 7), 3])
    bound = cauchy_bound(p)
    assert all(abs(r.approx()) < bound for r in isolate(p))


def random_squarefree(rng) -> UniPoly:
    """Ayrık rasyonel kökler, isteğe bağlı olarak y^2 - k (k asal) ile çarpılmış."""
    roots = set()
    for _ in range(rng.randint(1, 4)):
        roots.add(Fraction(rng.randint(-12, 18), rng.randint(1, 6)))
    poly = UniPoly.from_roots('y', sorted(roots), scale=rng.choice([1, -2, Fraction(3, 5)]))
    if rng.random() < 0.5:
        poly = poly * UniPoly('y', (-rng.choice([2, 3, 5, 7]), 0, 1))
    return poly


def check_isolation_against_sympy(rng, cases: int) -> None:
    for _ in range(cases):
        p = random_squarefree(rng)
        found = isolate(p)
        expected = p.to_sympy().real_roots()
        assert len(found) == len(expected)
        for left, right in zip(found, found[1:]):
            assert left.interval.hi <= right.interval.lo
        for root, r in zip(found, expected):
            lo, hi = to_sympy_rational(root.interval.lo), to_sympy_rational(root.interval.hi)
            if root.exact:
                assert r == lo
            else:
                assert bool(lo < r) and bool(r < hi)


def test_isolation_matches_sympy_real_roots(rng):
    check_isolation_against_sympy(rng, 60)


@pytest.mark.slow
def test_isolation_matches_sympy_real_roots_many(rng):
    check_isolation_against_sympy(rng, 500)
