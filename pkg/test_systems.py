#!/usr/bin/env python3
"""
Tam ve indirgenmiş Allee sistemleri, bölüntüler ve eliminantlar
"""

from fractions import Fraction

import pytest

from core.exceptions import InvalidMultiplicitiesError
from core.polycore import MultiPoly
from allee.systems import (allee_cubic, build_full, build_reduced, coupled_cubic, determinant, eliminant,
                           g1_eliminant, g2_eliminant, jacobian, partitions, swap_images)

A = MultiPoly.var('a')
B = MultiPoly.var('b')
Y = MultiPoly.var('y')


def test_partitions_of_four():
    parts = partitions(4)
    assert parts.pairs == [(3, 1), (2, 2)]
    assert parts.triples == [(2, 1, 1)]
    assert parts.all() == [(3, 1), (2, 2), (2, 1, 1)]


def test_partitions_of_six_and_triple_count_remark():
    parts = partitions(6)
    assert parts.pairs == [(5, 1), (4, 2), (3, 3)]
    assert parts.triples == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
    # n - 2 kapalı formu n = 6 için 4 der, gerçek sayı 3
    assert parts.remark_triple_count == 4
    assert parts.remark_discrepancy
    assert parts.to_dict()['triples'] == [[4, 1, 1], [3, 2, 1], [2, 2, 2]]


def test_partitions_small_n():
    assert partitions(1).all() == []
    assert partitions(2).all() == [(1, 1)]
    assert partitions(3).all() == [(2, 1), (1, 1, 1)]
    assert not partitions(3).remark_discrepancy


def test_full_system_single_patch():
    system = build_full(1)
    assert system.equations == (allee_cubic(MultiPoly.var('x1')),)
    with pytest.raises(ValueError):
        build_full(0)


def test_full_system_diagonal_states():
    """(b, ..., b) ve (1, ..., 1) her a için denge noktası"""
    system = build_full(3)
    a, b = Fraction(1, 100), Fraction(1, 5)
    assert system.evaluate([b, b, b], a, b) == [0, 0, 0]
    assert system.evaluate([1, 1, 1], a, b) == [0, 0, 0]
    assert system.evaluate([b, 1, 0], a, b) != [0, 0, 0]


def test_reduced_system_matches_full_on_diagonal_blocks():
    """G1(2, 1) denklemleri, tam sistemde x1 = x2 = y, x3 = z konmuş haliyle aynı"""
    reduced = build_reduced(3, (2, 1))
    full = build_full(3)
    blocks = {'x1': Y, 'x2': Y, 'x3': MultiPoly.var('z')}
    assert full.equations[0].substitute(blocks) == reduced.equations[0]
    assert full.equations[2].substitute(blocks) == reduced.equations[1]


def test_invalid_multiplicities():
    with pytest.raises(InvalidMultiplicitiesError):
        build_reduced(4, (2, 1))
    with pytest.raises(InvalidMultiplicitiesError):
        build_reduced(4, (1, 1, 2))
    with pytest.raises(InvalidMultiplicitiesError):
        eliminant((1, 1, 1, 1))


def test_g1_swap_symmetry():
    """G1(n1, n2)(y, z) = G1(n2, n1)(z, y)"""
    swapped = build_reduced(4, (1, 3))
    images = {eq.substitute({'y': MultiPoly.var('z'), 'z': Y}) for eq in swapped.equations}
    assert images == set(build_reduced(4, (3, 1)).equations)

    equal = build_reduced(4, (2, 2))
    for image in swap_images(equal):
        assert set(image.equations) == set(equal.equations)


def test_jacobian_at_origin():
    """Orijinde det J = b^2 + n a b"""
    sys = build_reduced(4, (2, 2))
    assert jacobian(sys).substitute({'y': 0, 'z': 0}) == B ** 2 + (A * B).scale(4)


def test_determinant_numeric():
    m = [[MultiPoly.constant(v) for v in row] for row in ((2, 0, 1), (1, 3, 0), (0, 1, 4))]
    assert determinant(m) == 25


def test_g1_core_vanishes_on_diagonal_fold():
    """Çekirdek y = b'de (a n2)^2 n2 (b^2 + n a - b) olur"""
    core = g1_eliminant(2, 2).core
    expected = (A.scale(2)) ** 2 * (B ** 2 + A.scale(4) - B).scale(2)
    assert core.substitute({'y': B}) == expected


def test_g1_polynomial_factors_through_cubic():
    e = g1_eliminant(3, 1)
    assert e.polynomial == allee_cubic(Y) * e.core
    assert e.core.leading_coefficient('y') == 1
    assert [name for name, _ in e.side_conditions] == ['z', 'y-z']


def test_g2_eliminant_branches():
    distinct = g2_eliminant(3, 2, 1)
    assert distinct.solutions_per_root == 1
    assert distinct.core.degree('y') == 6

    paired = g2_eliminant(2, 1, 1)
    assert paired.solutions_per_root == 2
    assert paired.core.degree('y') == 3
    assert eliminant((2, 1, 1)).multiplicities == (2, 1, 1)


def test_coupled_cubic_matches_steady_state_identity():
    """her koordinatta g(x_i) = a Σ x_j"""
    z = MultiPoly.var('z')
    assert coupled_cubic(z, 2) == z ** 3 - (1 + B) * z ** 2 + (2 * A + B) * z
    full = build_full(3)
    xs = [MultiPoly.var(f"x{i + 1}") for i in range(3)]
    total = A * (xs[0] + xs[1] + xs[2])
    for x, f in zip(xs, full.equations):
        assert f == total - coupled_cubic(x, 3)
