#!/usr/bin/env python3
"""
Nokta sayımı, toplam montajı ve sınıflandırma testleri
"""

import json
from fractions import Fraction
from itertools import product

import pytest

from config import constants
from core.exceptions import MissingPartitionError, NonGenericPointError
from allee.borderpoly import bp_total
from allee.cad2d import (active_factors, b_roots, critical_a_values, gap_bounds, project_factors,
                         projection_amax, sample_cells)
from allee.counting import (assemble_total, classify, count_G1, count_G2, count_all,
                            count_partition, multinomial, stabilizer_size)

SMALL_A = Fraction(1, 1000)
SMALL_B = Fraction(2, 9)


def test_reference_point_partition_counts(sample_point):
    """n = 4 referans noktası: G1(2,2) 8/6/3, G1(3,1) 8/6/6, G2(2,1,1) 26/6/3"""
    a, b = sample_point
    g22 = count_G1(a, b, 4, 2, 2)
    assert (g22.total_positive, g22.off_diagonal, g22.orbits, g22.paper_c) == (8, 6, 3, 6)
    g31 = count_G1(a, b, 4, 3, 1)
    assert (g31.total_positive, g31.off_diagonal, g31.orbits, g31.paper_c) == (8, 6, 6, 6)
    g211 = count_G2(a, b, 4, 2, 1, 1)
    assert (g211.total_positive, g211.off_diagonal, g211.orbits, g211.paper_c) == (26, 6, 3, 3)
    assert g211.method == "elimination"


def test_reference_point_totals(sample_point):
    a, b = sample_point
    total = count_all(4, a, b, constants.FORMULA_MODE_DEDUP)
    assert total.assembled_total == 81
    assert total.alternatives == {'dedup': 81, 'paper': 99, 'printed': 93}
    assert "93" in total.note and "81" in total.note and "99" in total.note
    paper = count_all(4, a, b, constants.FORMULA_MODE_PAPER)
    assert paper.assembled_total == 99


def test_g1_order_of_multiplicities_is_irrelevant(sample_point):
    a, b = sample_point
    forward = count_G1(a, b, 4, 3, 1)
    backward = count_G1(a, b, 4, 1, 3)
    assert forward.total_positive == backward.total_positive
    assert forward.off_diagonal == backward.off_diagonal
    assert backward.multiplicities == (1, 3)


def test_single_patch_has_three_states():
    total = count_all(1, Fraction(1, 3), Fraction(1, 4))
    assert total.counts == []
    assert total.assembled_total == 3


@pytest.mark.parametrize('n', [1, 2, 3])
def test_weak_coupling_gives_three_to_the_n(n):
    """a -> 0: her yama bağımsız olarak 0, b ya da 1"""
    total = count_all(n, SMALL_A, SMALL_B, constants.FORMULA_MODE_DEDUP)
    assert total.assembled_total == 3 ** n


def test_two_patch_modes_differ_by_swap_symmetry():
    total = count_all(2, SMALL_A, SMALL_B)
    assert total.count_for((1, 1)).off_diagonal == 6
    assert total.alternatives == {'dedup': 9, 'paper': 15}
    assert total.note == ""


def test_strong_coupling_leaves_only_homogeneous_states():
    total = count_all(3, Fraction(10), SMALL_B)
    assert total.assembled_total == 3
    assert all(c.off_diagonal == 0 for c in total.counts)


def test_points_outside_box_are_rejected():
    with pytest.raises(NonGenericPointError):
        count_all(4, Fraction(1, 100), Fraction(1, 2))
    with pytest.raises(NonGenericPointError):
        count_all(4, Fraction(0), Fraction(1, 4))


def test_point_on_border_curve_is_rejected():
    """b^2 + 4a - b = 0 üzerindeki nokta jenerik değil"""
    with pytest.raises(NonGenericPointError):
        count_all(4, Fraction(3, 64), Fraction(1, 4))
    with pytest.raises(NonGenericPointError):
        count_partition(Fraction(3, 64), Fraction(1, 4), 4, (2, 2))


def test_assemble_requires_every_partition(sample_point):
    a, b = sample_point
    counts = [count_G1(a, b, 4, 3, 1), count_G1(a, b, 4, 2, 2)]
    with pytest.raises(MissingPartitionError):
        assemble_total(4, counts)
    with pytest.raises(ValueError):
        assemble_total(4, counts + [count_G2(a, b, 4, 2, 1, 1)], mode="bogus")
    with pytest.raises(MissingPartitionError):
        count_G1(a, b, 5, 3, 1)


def test_symmetry_helpers():
    assert stabilizer_size((3, 1)) == 1
    assert stabilizer_size((2, 2)) == 2
    assert stabilizer_size((2, 1, 1)) == 2
    assert stabilizer_size((2, 2, 2)) == 6
    assert multinomial(4, (2, 1, 1)) == 12
    assert multinomial(4, (2, 2)) == 6


def test_classify_single_patch(cache_dir):
    report = classify(1, cache_dir=str(cache_dir))
    assert len(report.cells) == 1
    assert report.summary()['distinct_totals'] == [3]
    assert report.amax == 1


def test_classify_two_patches(cache_dir):
    report = classify(2, cache_dir=str(cache_dir))
    summary = report.summary()
    assert 3 in summary['distinct_totals']
    assert 9 in summary['distinct_totals']
    assert all(t % 2 == 1 for t in summary['distinct_totals'])
    assert len({c.cell_id for c in report.cells}) == len(report.cells)
    data = json.loads(json.dumps(report.to_dict()))
    assert data['partitions']['pairs'] == [[1, 1]]
    assert 'seconds' not in data


def test_classify_with_oracle_check(cache_dir):
    report = classify(1, cache_dir=str(cache_dir), oracle_check=1)
    assert report.oracle_checks == [{'cell_id': 'c000_00', 'oracle': 3, 'dedup': 3,
                                     'complete': True, 'agree': True}]
    assert report.cells[0].oracle_count == 3


@pytest.mark.slow
def test_classify_three_patches(cache_dir):
    report = classify(3, cache_dir=str(cache_dir), jobs=2)
    totals = report.summary()['distinct_totals']
    assert totals[0] == 3
    assert totals[-1] == 27
    assert all(3 <= t <= 27 and t % 2 == 1 for t in totals)
    assert report.partitions['triples'] == [[1, 1, 1]]


@pytest.mark.parametrize('n', [1, 2, 3])
def test_decoupled_limit_at_several_points(n):
    """Çok küçük a'da her b için yamalar bağımsızdır"""
    for a, b in product([Fraction(1, 10 ** 4), Fraction(1, 10 ** 5)],
                        [Fraction(1, 10), SMALL_B, Fraction(3, 8)]):
        total = count_all(n, a, b, constants.FORMULA_MODE_DEDUP)
        assert total.alternatives[constants.FORMULA_MODE_DEDUP] == 3 ** n


def test_two_patch_totals_stay_in_range(cache_dir):
    totals = classify(2, cache_dir=str(cache_dir)).summary()['distinct_totals']
    assert totals[0] == 3
    assert totals[-1] == 9
    assert all(3 <= t <= 9 for t in totals)


def interior_points(bp, cell_count: int, per_cell: int, rng):
    """Rastgele seçilen hücrelerin örnek toplamı ve her birinin içinden rastgele rasyonel noktalar."""
    factors = active_factors(bp)
    projection = project_factors(factors)
    amax = projection_amax(projection)
    a_gaps = gap_bounds(critical_a_values(projection, amax), constants.DEFAULT_A_LOW, amax)
    cells = sample_cells(bp, amax=amax)
    chosen = rng.sample(cells, min(cell_count, len(cells)))
    for cell in chosen:
        i, j = cell.stack_index
        a_lo, a_hi = a_gaps[i]
        points = []
        for _ in range(per_cell):
            a = a_lo + (a_hi - a_lo) * Fraction(rng.randint(1, 99), 100)
            b_gaps = gap_bounds(b_roots(factors, a, constants.DEFAULT_B_RANGE), *constants.DEFAULT_B_RANGE)
            b_lo, b_hi = b_gaps[j]
            points.append((a, b_lo + (b_hi - b_lo) * Fraction(rng.randint(1, 99), 100)))
        yield cell, points


def check_cell_constancy(n: int, cell_count: int, per_cell: int, rng) -> int:
    checked = 0
    for cell, points in interior_points(bp_total(n, prune=True), cell_count, per_cell, rng):
        expected = count_all(n, cell.a, cell.b).assembled_total
        for a, b in points:
            assert count_all(n, a, b).assembled_total == expected, (cell.cell_id, a, b)
        checked += 1
    return checked


def test_total_is_constant_inside_two_patch_cells(rng):
    assert check_cell_constancy(2, cell_count=6, per_cell=1, rng=rng) >= 1


@pytest.mark.slow
@pytest.mark.parametrize('n', [3, 4])
def test_total_is_constant_inside_cells(n, rng):
    assert check_cell_constancy(n, cell_count=25, per_cell=3, rng=rng) >= 25
