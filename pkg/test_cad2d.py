#!/usr/bin/env python3
"""
Açık CAD örneklemesi testleri
"""

from fractions import Fraction

import pytest

from core.polycore import MultiPoly, RatInterval, UniPoly
from core.realroots import isolate, separate
from allee.borderpoly import BorderFactor, BorderPoly, trivial_factors
from allee.cad2d import (active_factors, amax_bound, gap_bounds, gap_samples, project_factors,
                         projection_amax, sample_cells, simplest_rational)

A = MultiPoly.var('a')
B = MultiPoly.var('b')


def make_bp(*polys: MultiPoly) -> BorderPoly:
    factors = [BorderFactor(p.primitive()) for p in list(polys) + trivial_factors()]
    return BorderPoly(n=0, label="test", factors=factors)


@pytest.mark.parametrize('lo, hi, expected', [
    (Fraction(1, 3), Fraction(1, 2), Fraction(2, 5)),
    (Fraction(0), Fraction(1), Fraction(1, 2)),
    (Fraction(-1), Fraction(1), Fraction(0)),
    (Fraction(2), Fraction(7, 2), Fraction(3)),
    (Fraction(-3, 2), Fraction(-1, 2), Fraction(-1)),
    (Fraction(0), Fraction(1, 4), Fraction(1, 5)),
])
def test_simplest_rational(lo, hi, expected):
    assert simplest_rational(lo, hi) == expected


def test_simplest_rational_rejects_empty_interval():
    with pytest.raises(ValueError):
        simplest_rational(Fraction(1, 2), Fraction(1, 2))


def test_gap_samples_interleave_roots():
    p = UniPoly('y', (-2, 0, 1))
    roots = isolate(p, RatInterval(0, 2))
    samples = gap_samples(roots, Fraction(0), Fraction(2))
    assert len(samples) == 2
    assert samples[0] ** 2 < 2 < samples[1] ** 2


def test_gap_bounds_avoid_isolating_intervals():
    roots = separate(isolate(UniPoly('y', (-2, 0, 1)), RatInterval(0, 2))
                     + isolate(UniPoly('y', (-Fraction(3, 2), 1))))
    gaps = gap_bounds(roots, Fraction(0), Fraction(2))
    assert len(gaps) == 3
    assert gaps[0][0] == 0 and gaps[-1][1] == 2
    assert gaps[0][1] ** 2 < 2 < gaps[1][0] ** 2
    assert gaps[1][1] == Fraction(3, 2) == gaps[2][0]


def test_box_edges_are_not_active():
    assert active_factors(make_bp()) == []
    with pytest.raises(ValueError):
        active_factors(BorderPoly(0, "zero", [BorderFactor(MultiPoly.constant(0))]))


def test_single_horizontal_line_gives_two_cells():
    cells = sample_cells(make_bp(B - Fraction(1, 4)))
    assert [c.stack_index for c in cells] == [(0, 0), (0, 1)]
    assert [c.b for c in cells] == [Fraction(1, 5), Fraction(1, 3)]
    assert cells[0].cell_id == "c000_00"


def test_grid_of_lines_gives_four_cells():
    cells = sample_cells(make_bp(A - Fraction(1, 8), B - Fraction(1, 4)))
    assert len(cells) == 4
    assert sorted({c.a for c in cells}) == [Fraction(1, 9), Fraction(1)]
    for cell in cells:
        assert cell.a != Fraction(1, 8) and cell.b != Fraction(1, 4)


def test_parabola_amax_and_cells():
    """b^2 + 4a - b: kritik a = 1/16, A_max = 17/16"""
    bp = make_bp(B ** 2 + A.scale(4) - B)
    assert amax_bound(bp) == Fraction(17, 16)
    cells = sample_cells(bp)
    assert [c.stack_index for c in cells] == [(0, 0), (0, 1), (1, 0)]
    assert cells[0].a == Fraction(1, 17)


def test_root_leaving_through_top_edge_splits_a_axis():
    """b = a doğrusu b = 1/2 kenarını a = 1/2'de keser"""
    projection = project_factors(active_factors(make_bp(B - A)))
    assert any(p.evaluate(Fraction(1, 2)) == 0 for p in projection)
    cells = sample_cells(make_bp(B - A))
    assert [c.stack_index for c in cells] == [(0, 0), (0, 1), (1, 0)]
    assert cells[0].a < Fraction(1, 2) < cells[-1].a


def test_custom_b_range():
    cells = sample_cells(make_bp(B - Fraction(1, 4)), b_range=(Fraction(0), Fraction(1, 4)))
    assert len(cells) == 1
    assert Fraction(0) < cells[0].b < Fraction(1, 4)


def test_samples_avoid_every_factor():
    bp = make_bp(B ** 2 + A.scale(4) - B, B - A, A.scale(16) - 1)
    for cell in sample_cells(bp, amax=Fraction(2)):
        assert not bp.vanishes_at(cell.a, cell.b)
        assert Fraction(0) < cell.a < Fraction(2)
        assert Fraction(0) < cell.b < Fraction(1, 2)


def test_default_amax_matches_amax_bound():
    bp = make_bp(B ** 2 + A.scale(4) - B, B - A)
    assert projection_amax([]) == 1
    assert projection_amax([UniPoly('a', (-1, 16))]) == Fraction(17, 16)
    implicit = sample_cells(bp)
    explicit = sample_cells(bp, amax=amax_bound(bp))
    assert [(c.cell_id, c.a, c.b) for c in implicit] == [(c.cell_id, c.a, c.b) for c in explicit]
