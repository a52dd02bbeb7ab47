#!/usr/bin/env python3
"""
Report Export - Sınıflandırma raporunun JSON, CSV ve Excel çıktıları

JSON anahtarları sıralı yazılır; sıcak cache ile aynı komut bayt bayt aynı dosyayı üretir.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from config import constants
from data_models import ClassificationReport

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def report_json(report: ClassificationReport) -> str:
    """Raporun kanonik JSON metni."""
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_text(path: Path, text: str) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
    except OSError as e:
        logger.error(constants.ERROR_REPORT_WRITE.format(path=path, error=e))
        raise
    logger.info(constants.LOG_MSG_REPORT_SAVED.format(path=path))
    return path


def save_report(report: ClassificationReport, path: PathLike) -> Path:
    """
    Raporu JSON olarak kaydeder.

    Args:
        report (ClassificationReport): sınıflandırma sonucu
        path: hedef dosya

    Returns:
        Path: yazılan dosya

    Raises:
        OSError: dosya yazılamazsa
    """
    return write_text(Path(path), report_json(report))


def load_report(path: PathLike) -> ClassificationReport:
    """
    Daha önce kaydedilmiş JSON raporunu okur (render komutu için).

    Raises:
        OSError: dosya okunamazsa ya da biçim bozuksa
    """
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return ClassificationReport.from_dict(json.load(f))
    except OSError as e:
        logger.error(constants.ERROR_REPORT_READ.format(path=path, error=e))
        raise
    except (ValueError, KeyError, TypeError) as e:
        logger.error(constants.ERROR_REPORT_READ.format(path=path, error=e))
        raise OSError(constants.ERROR_REPORT_READ.format(path=path, error=e)) from e


def export_cells_csv(report: ClassificationReport, path: PathLike) -> Path:
    """Hücre tablosunu (tam rasyonel pay/payda sütunlarıyla) CSV'ye yazar."""
    return write_text(Path(path), report.cells_frame().to_csv(index=False))


def summary_frame(report: ClassificationReport) -> pd.DataFrame:
    summary = report.summary()
    rows = [{'total': int(total), 'cells': count} for total, count in summary['cells_per_total'].items()]
    return pd.DataFrame(rows, columns=['total', 'cells'])


def oracle_frame(report: ClassificationReport) -> pd.DataFrame:
    return pd.DataFrame(report.oracle_checks,
                        columns=['cell_id', 'oracle', 'dedup', 'complete', 'agree'])


def export_excel(report: ClassificationReport, path: PathLike) -> Path:
    """
    Hücreleri, faktörleri, özeti ve oracle kontrollerini ayrı sayfalarda Excel'e yazar.

    Raises:
        OSError: dosya yazılamazsa
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with pd.ExcelWriter(path, engine='openpyxl') as writer:
            cells = report.cells_frame()
            if not cells.empty:
                cells.to_excel(writer, sheet_name='Cells', index=False)
            factors = report.factors_frame()
            if not factors.empty:
                factors.to_excel(writer, sheet_name='Factors', index=False)
            summary_frame(report).to_excel(writer, sheet_name='Summary', index=False)
            if report.oracle_checks:
                oracle_frame(report).to_excel(writer, sheet_name='Oracle', index=False)
    except OSError as e:
        logger.error(constants.LOG_MSG_EXCEL_EXPORT_ERROR.format(error=e))
        raise
    logger.info(constants.LOG_MSG_EXCEL_EXPORT_SUCCESS.format(filename=path))
    return path


def export_timings_csv(rows: List[Dict[str, Any]], path: PathLike) -> Path:
    """bp zamanlama tablosu: n, faktör sayısı, süre, cache isabeti."""
    frame = pd.DataFrame(rows, columns=['n', 'factors', 'pruned', 'seconds', 'cache_hit'])
    return write_text(Path(path), frame.to_csv(index=False))


def write_report_artifacts(report: ClassificationReport, out_dir: PathLike,
                           xlsx_path: Optional[PathLike] = None) -> Dict[str, Path]:
    """
    out_dir altına JSON raporu ve hücre CSV'sini yazar; istenirse Excel de.

    Returns:
        Dict[str, Path]: 'json', 'csv' ve varsa 'xlsx' yolları
    """
    out_dir = Path(out_dir)
    paths = {
        'json': save_report(report, out_dir / constants.REPORT_JSON_FILENAME.format(n=report.n)),
        'csv': export_cells_csv(report, out_dir / constants.CELLS_CSV_FILENAME.format(n=report.n)),
    }
    if xlsx_path is not None:
        paths['xlsx'] = export_excel(report, xlsx_path)
    return paths
