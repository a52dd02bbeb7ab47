#!/usr/bin/env python3
"""
Aralık çözücü (oracle) testleri
"""

from fractions import Fraction

import pytest

from config import constants
from core.exceptions import NonGenericPointError, OracleBudgetError
from core.polycore import RatInterval
from allee.counting import count_all
from allee.oracle import (EMPTY, UNIQUE, CompiledSystem, count_reduced_by_oracle, default_region,
                          full_equations, interval_solve_full, krawczyk, verify_reduction)

SMALL_A = Fraction(1, 1000)
SMALL_B = Fraction(2, 9)


def test_single_patch_has_three_roots():
    result = interval_solve_full(1, Fraction(1, 3), Fraction(1, 4))
    assert result.complete
    assert result.count == 3
    assert result.bound_violations == 0
    assert all(box.status == constants.BOX_UNIQUE_ROOT for box in result.boxes)


def test_two_patches_weak_coupling():
    result = interval_solve_full(2, SMALL_A, SMALL_B)
    assert result.complete
    assert result.count == 9


def test_symmetric_search_matches_full_search():
    full = interval_solve_full(2, SMALL_A, SMALL_B)
    ordered = interval_solve_full(2, SMALL_A, SMALL_B, symmetric=True)
    assert ordered.symmetric
    assert ordered.count == full.count
    assert sum(box.orbit_size for box in ordered.boxes) == ordered.count


def test_tiny_budget_is_incomplete():
    result = interval_solve_full(2, SMALL_A, SMALL_B, budget=3)
    assert not result.complete
    assert result.unresolved
    with pytest.raises(OracleBudgetError):
        verify_reduction(2, SMALL_A, SMALL_B, budget=3)


def test_krawczyk_certifies_simple_root():
    system = CompiledSystem(full_equations(1, Fraction(1, 3), Fraction(1, 4)), ['x1'])
    status, image = krawczyk(system, (RatInterval(Fraction(7, 32), Fraction(9, 32)),))
    assert status == UNIQUE
    assert image[0].contains(Fraction(1, 4))
    status, _ = krawczyk(system, (RatInterval(Fraction(1, 2), Fraction(5, 8)),))
    assert status == EMPTY


def test_default_region():
    region = default_region(3)
    assert len(region) == 3
    assert region[0] == RatInterval(-constants.ORACLE_REGION_MARGIN, 2 * constants.ORACLE_STEADY_STATE_BOUND)


def test_reduced_system_fallback_counts():
    total, off = count_reduced_by_oracle((1, 1), SMALL_A, SMALL_B)
    # (0,0) hariç: (b,b), (1,1) köşegen, altı köşegen dışı
    assert (total, off) == (8, 6)


@pytest.mark.slow
def test_reduction_holds_for_symmetric_system():
    assert verify_reduction(3, SMALL_A, SMALL_B)


@pytest.mark.slow
def test_reduction_fails_when_thresholds_differ():
    """Eşikleri farklı yamalarda dört farklı değerli denge noktası vardır"""
    thresholds = [Fraction(1, 10), Fraction(1, 5), Fraction(3, 10), Fraction(2, 5)]
    assert verify_reduction(4, SMALL_A, SMALL_B, thresholds=thresholds) is False


@pytest.mark.slow
def test_reference_point_full_count(sample_point):
    a, b = sample_point
    result = interval_solve_full(4, a, b, symmetric=True)
    assert result.complete
    assert result.count == constants.CLAIMED_TOTAL


def test_reduction_holds_for_two_patches():
    assert verify_reduction(2, SMALL_A, SMALL_B)


@pytest.mark.slow
def test_reduction_holds_for_four_patches():
    assert verify_reduction(4, SMALL_A, SMALL_B)


def oracle_matches_dedup(rng, n: int, wanted: int, attempts: int) -> int:
    """Rastgele genel noktalarda oracle sayımı ile dedup toplamını karşılaştırır; karşılaştırılan nokta sayısı."""
    compared = 0
    for _ in range(attempts):
        if compared >= wanted:
            break
        a = Fraction(rng.randint(1, 800), 8000)
        b = Fraction(rng.randint(1, 499), 1000)
        try:
            dedup = count_all(n, a, b).alternatives[constants.FORMULA_MODE_DEDUP]
        except NonGenericPointError:
            continue
        result = interval_solve_full(n, a, b)
        if not result.complete:
            continue
        assert result.count == dedup, (a, b)
        compared += 1
    return compared


def test_oracle_matches_dedup_at_random_points(rng):
    assert oracle_matches_dedup(rng, 2, wanted=6, attempts=20) >= 6


@pytest.mark.slow
def test_oracle_matches_dedup_at_random_three_patch_points(rng):
    assert oracle_matches_dedup(rng, 3, wanted=20, attempts=60) >= 20


@pytest.mark.slow
@pytest.mark.parametrize('a, b, total', [
    (Fraction(83, 2000), Fraction(243, 500), 15),
    (Fraction(3, 320), Fraction(421, 1000), 27),
    (Fraction(667, 8000), Fraction(1, 40), 3),
])
def test_oracle_and_dedup_at_known_three_patch_points(a, b, total):
    result = interval_solve_full(3, a, b)
    assert result.complete
    assert result.count == total
    assert count_all(3, a, b).alternatives[constants.FORMULA_MODE_DEDUP] == total
