#!/usr/bin/env python3
"""
Region Plot - (a, b) bölge haritası: SVG (matplotlib) ve etkileşimli HTML (plotly)

Hücre örnekleri toplam denge sayısıyla etiketlenmiş noktalar, bp faktörleri ise sabit
bir a-ızgarasında her sütunda kesin b-kök izolasyonuyla izlenen kırık çizgilerdir.
Eğri izleme yalnızca çizim içindir; sınıflandırma hattına geri beslenmez.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import matplotlib
matplotlib.use('Agg')
matplotlib.rcParams.update({'svg.hashsalt': 'allee-rrc'})
import matplotlib.pyplot as plt
import plotly.graph_objects as go

from config import config, constants
from core.polycore import MultiPoly, RatInterval, squarefree_part
from core.realroots import isolate, refine
from allee.borderpoly import has_no_root_in_box
from allee.cad2d import project_factors, critical_a_values
from data_models import CellSample, ClassificationReport

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

TRACE_WIDTH = Fraction(1, 2 ** 20)


@dataclass
class Polyline:
    """Bir faktörün ardışık sütunlarda aynı sıradaki b-kökünden oluşan parçası."""
    factor_index: int
    branch: int
    points: List[Tuple[float, float]] = field(default_factory=list)


def report_factors(report: ClassificationReport) -> List[MultiPoly]:
    """Rapordaki faktörlerden kutuda kök taşıyabilenler."""
    polys = [MultiPoly.from_json(f['poly']) for f in report.factors if 'poly' in f]
    return [p for p in polys if not p.is_constant and not has_no_root_in_box(p)]


def plot_amax(factors: Sequence[MultiPoly], amax: Fraction) -> Fraction:
    """
    Çizim için a üst sınırı: en büyük kritik a değerinin PLOT_AMAX_FACTOR katı.

    Kritik değer yoksa ya da sınır amax'ı aşıyorsa amax kullanılır.
    """
    critical = critical_a_values(project_factors(factors), amax) if factors else []
    if not critical:
        return amax
    top = critical[-1].interval.hi * constants.PLOT_AMAX_FACTOR
    return min(top, amax)


def column_values(amax: Fraction, columns: int) -> List[Fraction]:
    return [amax * (2 * k + 1) / (2 * columns) for k in range(columns)]


def trace_curves(factors: Sequence[MultiPoly], amax: Fraction,
                 columns: Optional[int] = None) -> Tuple[List[Polyline], List[float]]:
    """
    Faktörlerin (0, amax) × (0, 1/2) içindeki sıfır kümelerini izler.

    Args:
        factors: {a, b} faktörleri
        amax: a üst sınırı
        columns: a-ızgarası sütun sayısı (varsayılan config.svg_columns)

    Returns:
        (kırık çizgiler, yalnızca a'ya bağlı faktörlerin dikey doğru konumları)
    """
    columns = columns or config.svg_columns
    b_domain = RatInterval(constants.DEFAULT_B_LOW, constants.DEFAULT_B_HIGH)
    polylines: List[Polyline] = []
    verticals: List[float] = []
    for index, f in enumerate(factors):
        if not f.occurs('b'):
            roots = isolate(f.as_univariate('a'), RatInterval(constants.DEFAULT_A_LOW, amax))
            verticals.extend(refine(r, TRACE_WIDTH).approx() for r in roots)
            continue
        open_lines: Dict[int, Polyline] = {}
        previous = -1
        for a in column_values(amax, columns):
            special = f.substitute({'a': a}).as_univariate('b')
            roots = isolate(squarefree_part(special), b_domain) if special.degree > 0 else []
            if len(roots) != previous:
                # kök sayısı değişti: dallar yeniden başlar
                polylines.extend(line for line in open_lines.values() if len(line.points) > 1)
                open_lines = {}
                previous = len(roots)
            for j, r in enumerate(roots):
                line = open_lines.setdefault(j, Polyline(index, j))
                line.points.append((float(a), refine(r, TRACE_WIDTH).approx()))
        polylines.extend(line for line in open_lines.values() if len(line.points) > 1)
    return polylines, verticals


def _visible(cells: Sequence[CellSample], amax: Fraction) -> List[CellSample]:
    return [c for c in cells if c.total is not None and c.a < amax]


def render_svg(report: ClassificationReport, path: PathLike, amax: Optional[Fraction] = None,
               columns: Optional[int] = None) -> Path:
    """
    Bölge haritasını SVG olarak yazar.

    Args:
        report (ClassificationReport): sınıflandırma sonucu
        path: hedef .svg
        amax (Fraction, optional): çizim sınırı; None ise plot_amax
        columns (int, optional): eğri izleme sütun sayısı

    Returns:
        Path: yazılan dosya

    Raises:
        OSError: dosya yazılamazsa
    """
    path = Path(path)
    factors = report_factors(report)
    amax = amax or plot_amax(factors, report.amax)
    polylines, verticals = trace_curves(factors, amax, columns)
    cells = _visible(report.cells, amax)

    fig, ax = plt.subplots(figsize=(8, 6))
    for line in polylines:
        xs, ys = zip(*line.points)
        ax.plot(xs, ys, color='black', lw=0.8)
    for x in verticals:
        ax.axvline(x, color='black', lw=0.8)
    if cells:
        totals = [c.total.assembled_total for c in cells]
        points = ax.scatter([float(c.a) for c in cells], [float(c.b) for c in cells],
                            c=totals, cmap=constants.CELL_COLORMAP, s=18, zorder=5)
        for cell, total in zip(cells, totals):
            ax.annotate(str(total), (float(cell.a), float(cell.b)), fontsize=6,
                        xytext=(2, 2), textcoords='offset points')
        fig.colorbar(points, ax=ax, label='denge noktası sayısı')
    ax.set_xlim(0, float(amax))
    ax.set_ylim(float(constants.DEFAULT_B_LOW), float(constants.DEFAULT_B_HIGH))
    ax.set_xlabel('a')
    ax.set_ylabel('b')
    ax.set_title(f"n = {report.n} ({report.formula_mode})")
    plt.tight_layout()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        plt.savefig(path, format='svg', bbox_inches='tight', metadata={'Date': None})
    except OSError as e:
        logger.error(constants.ERROR_REPORT_WRITE.format(path=path, error=e))
        raise
    finally:
        plt.close(fig)
    logger.info(constants.LOG_MSG_FIGURE_SAVED.format(path=path))
    return path


def render_html(report: ClassificationReport, path: PathLike, amax: Optional[Fraction] = None,
                columns: Optional[int] = None) -> Path:
    """Aynı haritanın plotly ile etkileşimli HTML sürümü."""
    path = Path(path)
    factors = report_factors(report)
    amax = amax or plot_amax(factors, report.amax)
    polylines, verticals = trace_curves(factors, amax, columns)
    cells = _visible(report.cells, amax)

    fig = go.Figure()
    for line in polylines:
        xs, ys = zip(*line.points)
        fig.add_trace(go.Scatter(x=list(xs), y=list(ys), mode='lines', line=dict(color='black', width=1),
                                 name=f"f{line.factor_index}", showlegend=False, hoverinfo='name'))
    for x in verticals:
        fig.add_vline(x=x, line_color='black', line_width=1)
    if cells:
        fig.add_trace(go.Scatter(
            x=[float(c.a) for c in cells],
            y=[float(c.b) for c in cells],
            mode='markers+text',
            text=[str(c.total.assembled_total) for c in cells],
            textposition='top right',
            hovertext=[f"{c.cell_id}: a={c.a}, b={c.b}, toplam={c.total.assembled_total}" for c in cells],
            hoverinfo='text',
            marker=dict(color=[c.total.assembled_total for c in cells],
                        colorscale=constants.CELL_COLORMAP.capitalize(), showscale=True),
            name='hücreler',
        ))
    fig.update_layout(title=f"n = {report.n} ({report.formula_mode})",
                      xaxis_title='a', yaxis_title='b',
                      xaxis_range=[0, float(amax)],
                      yaxis_range=[float(constants.DEFAULT_B_LOW), float(constants.DEFAULT_B_HIGH)])
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.write_html(str(path))
    except OSError as e:
        logger.error(constants.ERROR_REPORT_WRITE.format(path=path, error=e))
        raise
    logger.info(constants.LOG_MSG_FIGURE_SAVED.format(path=path))
    return path
