#!/usr/bin/env python3
"""
Veri modelleri, rapor dışa aktarımı ve bölge haritası testleri
"""

import json
from fractions import Fraction

import pytest
from openpyxl import load_workbook

from config import constants
from core.polycore import MultiPoly
from allee.borderpoly import BorderFactor
from data_models import CellSample, ClassificationReport, ReducedCount, TotalCount
from utils.region_plot import plot_amax, render_html, render_svg, report_factors, trace_curves
from utils.report_export import (export_excel, export_timings_csv, load_report, save_report,
                                 write_report_artifacts)

A = MultiPoly.var('a')
B = MultiPoly.var('b')


def make_total(total: int, off: int) -> TotalCount:
    counts = [ReducedCount((1, 1), off + 2, off, off // 2, off)]
    return TotalCount(n=2, counts=counts, assembled_total=total,
                      alternatives={'dedup': total, 'paper': 3 + 2 * off})


@pytest.fixture
def report():
    factors = [BorderFactor(p, provenance=[constants.TAG_COINCIDENCE], sources=['G1(1, 1)']).to_dict()
               for p in (A, B ** 2 + A.scale(4) - B, A.scale(16) - 1)]
    cells = [
        CellSample(Fraction(1, 17), Fraction(1, 5), (0, 0), "c000_00", make_total(3, 0)),
        CellSample(Fraction(1, 17), Fraction(2, 5), (0, 1), "c000_01", make_total(9, 6), oracle_count=9),
        CellSample(Fraction(1), Fraction(1, 3), (1, 0), "c001_00", make_total(3, 0)),
    ]
    return ClassificationReport(n=2, amax=Fraction(17, 16), factors=factors, cells=cells,
                                partitions={'pairs': [[1, 1]], 'triples': []},
                                oracle_checks=[{'cell_id': 'c000_01', 'oracle': 9, 'dedup': 9,
                                                'complete': True, 'agree': True}])


def test_reduced_count_label_and_round_trip():
    count = ReducedCount((2, 1, 1), 26, 6, 3, 3)
    assert count.kind == "G2"
    assert count.label == "G2(2, 1, 1)"
    assert ReducedCount.from_dict(count.to_dict()) == count


def test_total_count_round_trip():
    total = make_total(9, 6)
    restored = TotalCount.from_dict(json.loads(json.dumps(total.to_dict())))
    assert restored.assembled_total == 9
    assert restored.count_for((1, 1)).off_diagonal == 6
    with pytest.raises(KeyError):
        restored.count_for((2, 1))


def test_cell_row_keeps_exact_rationals(report):
    row = report.cells[1].to_row()
    assert (row['b_num'], row['b_den']) == (2, 5)
    assert row['off_G1(1, 1)'] == 6
    assert row['oracle_count'] == 9


def test_summary(report):
    summary = report.summary()
    assert summary['distinct_totals'] == [3, 9]
    assert summary['cells_per_total'] == {'3': 2, '9': 1}
    assert summary['factor_count'] == 3


def test_report_json_round_trip(report, tmp_path):
    path = save_report(report, tmp_path / "r.json")
    restored = load_report(path)
    assert restored.to_dict() == report.to_dict()
    # aynı rapor bayt bayt aynı dosyayı üretir
    again = save_report(restored, tmp_path / "r2.json")
    assert path.read_bytes() == again.read_bytes()


def test_load_report_rejects_bad_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[]", encoding='utf-8')
    with pytest.raises(OSError):
        load_report(bad)
    with pytest.raises(OSError):
        load_report(tmp_path / "missing.json")


def test_artifacts_and_excel(report, tmp_path):
    paths = write_report_artifacts(report, tmp_path, tmp_path / "x.xlsx")
    assert paths['json'].name == constants.REPORT_JSON_FILENAME.format(n=2)
    assert paths['csv'].read_text(encoding='utf-8').startswith("cell_id,")
    sheets = load_workbook(paths['xlsx']).sheetnames
    assert sheets == ['Cells', 'Factors', 'Summary', 'Oracle']


def test_excel_without_oracle_sheet(report, tmp_path):
    report.oracle_checks = []
    path = export_excel(report, tmp_path / "plain.xlsx")
    assert 'Oracle' not in load_workbook(path).sheetnames


def test_timings_csv(tmp_path):
    path = export_timings_csv([{'n': 2, 'factors': 7, 'pruned': 1, 'seconds': 0.5, 'cache_hit': False}],
                              tmp_path / "t.csv")
    assert path.read_text(encoding='utf-8').splitlines()[0] == "n,factors,pruned,seconds,cache_hit"


def test_report_factors_drop_box_edges(report):
    factors = report_factors(report)
    assert A not in factors
    assert len(factors) == 2


def test_plot_amax_zooms_on_critical_values(report):
    assert plot_amax(report_factors(report), Fraction(1)) == Fraction(5, 64)
    assert plot_amax([], Fraction(1)) == Fraction(1)


def test_trace_curves(report):
    polylines, verticals = trace_curves(report_factors(report), Fraction(1, 8), columns=16)
    assert verticals == [pytest.approx(1 / 16)]
    assert polylines
    for line in polylines:
        for a, b in line.points:
            assert 0 < a < 1 / 8
            assert 0 < b < 1 / 2
            assert b * b + 4 * a - b == pytest.approx(0, abs=1e-5)


def test_render_svg_is_deterministic(report, tmp_path):
    first = render_svg(report, tmp_path / "a.svg", columns=32)
    second = render_svg(report, tmp_path / "b.svg", columns=32)
    assert first.read_text(encoding='utf-8').lstrip().startswith("<?xml")
    assert first.read_bytes() == second.read_bytes()


def test_render_html(report, tmp_path):
    path = render_html(report, tmp_path / "map.html", columns=16)
    text = path.read_text(encoding='utf-8')
    assert "plotly" in text.lower()
    assert "c000_01" in text
