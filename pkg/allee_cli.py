#!/usr/bin/env python3
"""
Allee RRC komut satırı

Alt komutlar:
    bp        bp(a, b; n) hesaplar/cache'ler, faktör özeti ve zamanlama tablosu yazar
    classify  (0, A_max) × (0, 1/2) kutusunu sınıflandırır: JSON + CSV + SVG (+ HTML/Excel)
    count     tek bir (a, b) noktasında bölüntü sayımları ve iki montaj modu
    oracle    tam sistemi aralık çözücüyle sayar
    render    kayıtlı rapordan SVG/HTML haritayı yeniden çizer

Çıkış kodları: 0 başarılı, 1 oracle uyuşmazlığı, 2 jenerik olmayan nokta,
3 tamamlanmamış oracle, 4 G/Ç hatası.
"""

import argparse
import json
import logging
import sys
import time
from typing import Dict, List, Optional, Sequence

import pandas as pd

from config import Config, RunConfig, config, constants
from core.exceptions import NonGenericPointError, OracleBudgetError
from allee.borderpoly import bp_total
from allee.counting import classify, count_all
from allee.oracle import interval_solve_full
from db.cache_manager import CacheManager
from data_models import ClassificationReport, TotalCount
from utils.region_plot import render_html, render_svg
from utils.report_export import export_timings_csv, load_report, write_report_artifacts, write_text

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=constants.APP_NAME, description=constants.APP_DESCRIPTION)
    parser.add_argument('--config', default=None, help="key=value konfigürasyon dosyası")
    sub = parser.add_subparsers(dest='command', required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument('--cache-dir', dest='cache_dir', default=None)
        p.add_argument('--out', default=None, help="çıktı dizini")
        p.add_argument('--jobs', type=int, default=None)
        p.add_argument('--mode', choices=constants.FORMULA_MODES, default=None)

    p_bp = sub.add_parser('bp', help="border polinomu")
    p_bp.add_argument('--n', type=int, nargs='+', required=True)
    p_bp.add_argument('--no-prune', dest='no_prune', action='store_true')
    p_bp.add_argument('--clean-cache', dest='clean_cache', action='store_true',
                      help="eski sürüm cache dosyalarını sil")
    common(p_bp)

    p_cls = sub.add_parser('classify', help="bölge sınıflandırması")
    p_cls.add_argument('--n', type=int, required=True)
    p_cls.add_argument('--amax', default=None, help="'auto' ya da pay/payda")
    p_cls.add_argument('--b-range', dest='b_range', nargs=2, default=None, metavar=('B_LO', 'B_HI'))
    p_cls.add_argument('--svg', default=None)
    p_cls.add_argument('--html', default=None)
    p_cls.add_argument('--xlsx', default=None)
    p_cls.add_argument('--no-prune', dest='no_prune', action='store_true')
    p_cls.add_argument('--oracle-check', dest='oracle_check', type=int, default=0, metavar='K')
    p_cls.add_argument('--budget', type=int, default=None)
    common(p_cls)

    p_count = sub.add_parser('count', help="tek noktada sayım")
    p_count.add_argument('--n', type=int, required=True)
    p_count.add_argument('--a', required=True)
    p_count.add_argument('--b', required=True)
    common(p_count)

    p_or = sub.add_parser('oracle', help="aralık çözücü")
    p_or.add_argument('--n', type=int, required=True)
    p_or.add_argument('--a', required=True)
    p_or.add_argument('--b', required=True)
    p_or.add_argument('--budget', type=int, default=None)
    p_or.add_argument('--symmetric', action='store_true')
    common(p_or)

    p_render = sub.add_parser('render', help="rapordan harita")
    p_render.add_argument('--report', required=True)
    p_render.add_argument('--amax', default=None)
    p_render.add_argument('--svg', default=None)
    p_render.add_argument('--html', default=None)
    common(p_render)
    return parser


def format_total(total: TotalCount) -> List[str]:
    """count çıktısının satırları."""
    lines = []
    for c in total.counts:
        lines.append(f"{c.label}: total_positive={c.total_positive} off_diagonal={c.off_diagonal} "
                     f"orbits={c.orbits} c={c.paper_c} [{c.method}]")
    for mode in sorted(total.alternatives):
        lines.append(f"{mode}: {total.alternatives[mode]}")
    lines.append(f"assembled_total ({total.formula_mode}): {total.assembled_total}")
    if total.note:
        lines.append(total.note)
    return lines


def run_bp(run: RunConfig) -> int:
    rows: List[Dict[str, object]] = []
    manager = CacheManager(str(run.cache_dir))
    if run.clean_cache:
        print(f"eski cache dosyası silindi: {manager.clean_stale()}")
    for n in run.n_values:
        hit = manager.path_for(manager.generate_cache_key(n, run.prune)).exists()
        start = time.perf_counter()
        bp = bp_total(n, cache_dir=str(run.cache_dir), prune=run.prune, jobs=run.jobs)
        seconds = time.perf_counter() - start
        logger.info(constants.LOG_MSG_BP_TIMING.format(
            n=n, count=len(bp.factors), pruned=len(bp.pruned), seconds=seconds, hit=hit))
        rows.append({'n': n, 'factors': len(bp.factors), 'pruned': len(bp.pruned),
                     'seconds': round(seconds, 3), 'cache_hit': hit})
        summary = pd.DataFrame(bp.summary())
        print(f"bp(a, b; {n}): {len(bp.factors)} faktör")
        if not summary.empty:
            print(summary[['index', 'deg_a', 'deg_b', 'terms', 'provenance', 'sources']].to_string(index=False))
        write_text(run.out_dir / constants.BP_SUMMARY_CSV_FILENAME.format(n=n), summary.to_csv(index=False))
    export_timings_csv(rows, run.out_dir / constants.TIMING_CSV_FILENAME)
    stats = manager.get_cache_stats()
    print(f"cache: {stats['total_entries']} dosya, {stats['total_bytes']} bayt ({stats['cache_dir']})")
    return constants.EXIT_OK


def _oracle_status(report: ClassificationReport) -> int:
    incomplete = [c['cell_id'] for c in report.oracle_checks if not c['complete']]
    mismatched = [c['cell_id'] for c in report.oracle_checks if c['complete'] and not c['agree']]
    if mismatched:
        logger.error(constants.LOG_MSG_ORACLE_MISMATCH.format(cells=mismatched))
        return constants.EXIT_CHECK_FAILED
    if incomplete:
        logger.warning(constants.LOG_MSG_ORACLE_INCOMPLETE.format(count=len(incomplete)))
        return constants.EXIT_ORACLE_INCOMPLETE
    return constants.EXIT_OK


def run_classify(run: RunConfig) -> int:
    amax = None if run.amax == constants.AMAX_AUTO else run.amax
    report = classify(run.n, amax=amax, mode=run.formula_mode, jobs=run.jobs, cache_dir=str(run.cache_dir),
                      prune=run.prune, oracle_check=run.oracle_check, budget=run.budget, b_range=run.box)
    write_report_artifacts(report, run.out_dir, run.xlsx_path)
    render_svg(report, run.svg_path or run.out_dir / constants.REPORT_SVG_FILENAME.format(n=run.n))
    if run.html_path is not None:
        render_html(report, run.html_path)
    summary = report.summary()
    print(f"n={run.n}: {summary['cell_count']} hücre, farklı toplamlar {summary['distinct_totals']}")
    return _oracle_status(report)


def run_count(run: RunConfig) -> int:
    total = count_all(run.n, run.a, run.b, run.formula_mode)
    for line in format_total(total):
        print(line)
    return constants.EXIT_OK


def run_oracle(run: RunConfig) -> int:
    result = interval_solve_full(run.n, run.a, run.b, budget=run.budget, symmetric=run.symmetric_oracle)
    text = json.dumps(result.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)
    print(json.dumps({'count': result.count, 'complete': result.complete,
                      'boxes_processed': result.boxes_processed}, sort_keys=True))
    write_text(run.out_dir / constants.ORACLE_JSON_FILENAME.format(n=run.n), text + "\n")
    if not result.complete:
        logger.warning(constants.LOG_MSG_ORACLE_INCOMPLETE.format(count=len(result.unresolved)))
        return constants.EXIT_ORACLE_INCOMPLETE
    return constants.EXIT_OK


def run_render(run: RunConfig) -> int:
    report = load_report(run.report_path)
    amax = None if run.amax == constants.AMAX_AUTO else run.amax
    render_svg(report, run.svg_path or run.out_dir / constants.REPORT_SVG_FILENAME.format(n=report.n), amax)
    if run.html_path is not None:
        render_html(report, run.html_path, amax)
    return constants.EXIT_OK


COMMANDS = {
    'bp': run_bp,
    'classify': run_classify,
    'count': run_count,
    'oracle': run_oracle,
    'render': run_render,
}


def run(run_config: RunConfig) -> int:
    """
    Alt komutu çalıştırır ve hata türlerini çıkış kodlarına çevirir.

    Returns:
        int: çıkış kodu
    """
    try:
        return COMMANDS[run_config.command](run_config)
    except NonGenericPointError as e:
        logger.warning(constants.LOG_MSG_NON_GENERIC.format(error=e))
        print(str(e), file=sys.stderr)
        return constants.EXIT_NON_GENERIC
    except OracleBudgetError as e:
        logger.warning(constants.LOG_MSG_ORACLE_INCOMPLETE.format(count='?'))
        print(str(e), file=sys.stderr)
        return constants.EXIT_ORACLE_INCOMPLETE
    except OSError as e:
        logger.error(constants.LOG_MSG_UNEXPECTED_ERROR.format(error=e))
        print(str(e), file=sys.stderr)
        return constants.EXIT_IO_ERROR


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings: Config = config.with_file(args.config)
    except FileNotFoundError as e:
        print(str(e), file=sys.stderr)
        return constants.EXIT_IO_ERROR
    logging.basicConfig(level=settings.log_level, format=constants.LOG_FORMAT)
    try:
        run_config = settings.build_run_config(args.command, vars(args))
        return run(run_config)
    except ValueError as e:
        parser.error(str(e))


if __name__ == "__main__":
    sys.exit(main())
