import os
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from dotenv import load_dotenv, dotenv_values

from config import constants
from core.exceptions import RationalParseError

load_dotenv()

logger = logging.getLogger(__name__)

Amax = Union[Fraction, str]


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Komut satırından gelen 'pay/payda' veya tamsayı metnini kesin rasyonele çevirir.

    Ondalık gösterim bilinçli olarak reddedilir; sistemin sınırında kesinlik korunur.

    Args:
        text: "1319/1048576", "3" ya da zaten Fraction/int olan değer

    Returns:
        Fraction: sadeleştirilmiş rasyonel

    Raises:
        RationalParseError: biçim geçersizse veya ondalık verilirse
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    cleaned = str(text).strip()
    if not cleaned or any(ch in cleaned for ch in '.eE'):
        raise RationalParseError(constants.ERROR_RATIONAL_PARSE.format(text=text))
    parts = cleaned.split('/')
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError) as e:
        raise RationalParseError(constants.ERROR_RATIONAL_PARSE.format(text=text)) from e
    raise RationalParseError(constants.ERROR_RATIONAL_PARSE.format(text=text))


def _parse_bool(value: Optional[str], default: bool = False) -> bool:
    if value is None:
        return default
    return str(value).strip().lower() in ('1', 'true', 'yes', 'on', 'evet')


@dataclass
class RunConfig:
    """
    Tek bir CLI çalıştırmasının doğrulanmış ayarları.

    Attributes:
        command (str): bp, classify, count, oracle veya render.
        n (int): yama sayısı.
        a (Optional[Fraction]): count/oracle için a parametresi.
        b (Optional[Fraction]): count/oracle için b parametresi.
        amax (Amax): "auto" ya da pozitif rasyonel kutu sınırı.
        box (Tuple[Fraction, Fraction]): b aralığı (varsayılan (0, 1/2)).
        out_dir (Path): artefaktların yazılacağı dizin.
        svg_path (Optional[Path]): SVG bölge haritası yolu.
        html_path (Optional[Path]): plotly HTML haritası yolu.
        xlsx_path (Optional[Path]): Excel raporu yolu.
        report_path (Optional[Path]): render için mevcut rapor.
        cache_dir (Path): bp cache dizini.
        jobs (int): paralel işçi sayısı.
        formula_mode (str): "dedup" veya "paper".
        budget (int): oracle kutu bütçesi.
        prune (bool): kutuda kökü olmayan faktörleri at.
        oracle_check (int): classify sırasında oracle ile kontrol edilecek hücre sayısı.
        symmetric_oracle (bool): oracle'da sıralı yörünge araması.
        n_values (Tuple[int, ...]): bp zamanlama tablosu için n listesi.
        clean_cache (bool): bp öncesi başka algoritma sürümüne ait cache dosyalarını sil.
    """
    command: str
    n: int = 2
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None
    amax: Amax = constants.AMAX_AUTO
    box: Tuple[Fraction, Fraction] = constants.DEFAULT_B_RANGE
    out_dir: Path = Path(constants.DEFAULT_OUT_DIR)
    svg_path: Optional[Path] = None
    html_path: Optional[Path] = None
    xlsx_path: Optional[Path] = None
    report_path: Optional[Path] = None
    cache_dir: Path = Path(constants.DEFAULT_CACHE_DIR)
    jobs: int = 1
    formula_mode: str = constants.FORMULA_MODE_DEDUP
    budget: int = constants.DEFAULT_ORACLE_BUDGET
    prune: bool = True
    oracle_check: int = 0
    symmetric_oracle: bool = False
    n_values: Tuple[int, ...] = field(default_factory=tuple)
    clean_cache: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(constants.ERROR_BAD_N.format(n=self.n))
        if self.amax != constants.AMAX_AUTO:
            self.amax = parse_rational(self.amax)
            if self.amax <= 0:
                raise ValueError(constants.ERROR_AMAX_NOT_POSITIVE.format(amax=self.amax))
        if self.formula_mode not in constants.FORMULA_MODES:
            raise ValueError(constants.ERROR_UNKNOWN_MODE.format(mode=self.formula_mode))
        lo, hi = self.box
        if not (constants.DEFAULT_B_LOW <= lo < hi <= constants.DEFAULT_B_HIGH):
            raise ValueError(constants.ERROR_BAD_B_RANGE.format(box=[str(v) for v in self.box]))
        self.jobs = max(1, int(self.jobs))

    def to_dict(self) -> Dict[str, object]:
        return {
            'command': self.command,
            'n': self.n,
            'a': None if self.a is None else str(self.a),
            'b': None if self.b is None else str(self.b),
            'amax': str(self.amax),
            'box': [str(v) for v in self.box],
            'jobs': self.jobs,
            'formula_mode': self.formula_mode,
            'budget': self.budget,
            'prune': self.prune,
        }


class Config:
    """Configuration class for the Allee classifier"""

    def __init__(self, config_file: Optional[str] = None):
        # Önce key=value dosyasından, yoksa ortam değişkenlerinden oku
        self.config_file: Optional[str] = config_file or os.getenv('ALLEE_CONFIG')
        self._file_values: Dict[str, str] = self._load_config_file(self.config_file)

        self.cache_dir: str = self._get_config_value('ALLEE_CACHE_DIR', constants.DEFAULT_CACHE_DIR)
        self.out_dir: str = self._get_config_value('ALLEE_OUT_DIR', constants.DEFAULT_OUT_DIR)
        self.jobs: int = int(self._get_config_value('ALLEE_JOBS', '1'))
        self.amax: str = self._get_config_value('ALLEE_AMAX', constants.AMAX_AUTO)
        self.formula_mode: str = self._get_config_value('ALLEE_MODE', constants.FORMULA_MODE_DEDUP)
        self.oracle_budget: int = int(self._get_config_value('ALLEE_BUDGET', str(constants.DEFAULT_ORACLE_BUDGET)))
        self.log_level: str = self._get_config_value('ALLEE_LOG_LEVEL', 'INFO').upper()
        self.cross_check: bool = _parse_bool(self._get_config_value('ALLEE_CROSS_CHECK'), False)
        self.svg_columns: int = int(self._get_config_value('ALLEE_SVG_COLUMNS', str(constants.DEFAULT_SVG_COLUMNS)))
        self.oracle_precision_bits: int = int(
            self._get_config_value('ALLEE_ORACLE_PRECISION', str(constants.DEFAULT_ORACLE_PRECISION_BITS))
        )

    @staticmethod
    def _load_config_file(path: Optional[str]) -> Dict[str, str]:
        if not path:
            return {}
        if not Path(path).exists():
            raise FileNotFoundError(path)
        values = {k: v for k, v in dotenv_values(path).items() if v is not None}
        logger.info(constants.LOG_MSG_CONFIG_FILE.format(path=path))
        return values

    def _get_config_value(self, key: str, default: Optional[str] = None) -> Optional[str]:
        """
        Önce environment variable'dan oku, yoksa konfigürasyon dosyasından oku.

        Args:
            key (str): Config anahtarı (ALLEE_ önekli)
            default (str, optional): Varsayılan değer

        Returns:
            Optional[str]: Config değeri veya None
        """
        value = os.getenv(key)
        if value:
            return value
        return self.file_value(key[len('ALLEE_'):] if key.startswith('ALLEE_') else key, default)

    def file_value(self, flag: str, default: Optional[str] = None) -> Optional[str]:
        """Konfigürasyon dosyasında flag adıyla (cache-dir, cache_dir, CACHE_DIR) arar."""
        candidates = {flag, flag.lower(), flag.lower().replace('_', '-'), flag.lower().replace('-', '_'),
                      flag.upper().replace('-', '_')}
        for key in candidates:
            if key in self._file_values and self._file_values[key] != '':
                return self._file_values[key]
        return default

    def with_file(self, config_file: Optional[str]) -> 'Config':
        """Verilen dosyayla yeni bir Config döndürür; dosya yoksa kendisini."""
        if not config_file or config_file == self.config_file:
            return self
        return Config(config_file)

    def build_run_config(self, command: str, flags: Dict[str, object]) -> RunConfig:
        """
        CLI flag'lerini, dosya ve ortam değerleriyle birleştirip RunConfig üretir.

        Öncelik sırası: flag > konfigürasyon dosyası > ortam > varsayılan.

        Args:
            command (str): alt komut adı
            flags (Dict[str, object]): argparse namespace sözlüğü (None = verilmedi)

        Returns:
            RunConfig: doğrulanmış çalışma ayarları
        """
        def pick(name: str, fallback):
            value = flags.get(name)
            if value is not None:
                return value
            from_file = self.file_value(name)
            return from_file if from_file is not None else fallback

        n_raw = flags.get('n')
        n_values: Tuple[int, ...] = ()
        if isinstance(n_raw, (list, tuple)):
            n_values = tuple(int(v) for v in n_raw)
            n_raw = n_values[0] if n_values else None
        n = int(n_raw if n_raw is not None else self.file_value('n', '2'))

        a = flags.get('a')
        b = flags.get('b')
        out_dir = Path(pick('out', self.out_dir))
        svg = pick('svg', None)
        html = pick('html', None)
        xlsx = pick('xlsx', None)
        report = flags.get('report')
        b_range = flags.get('b_range')
        box = constants.DEFAULT_B_RANGE if not b_range else \
            tuple(parse_rational(v) for v in b_range)
        return RunConfig(
            command=command,
            n=n,
            a=None if a is None else parse_rational(a),
            b=None if b is None else parse_rational(b),
            amax=pick('amax', self.amax),
            box=box,
            out_dir=out_dir,
            svg_path=None if svg is None else Path(svg),
            html_path=None if html is None else Path(html),
            xlsx_path=None if xlsx is None else Path(xlsx),
            report_path=None if report is None else Path(report),
            cache_dir=Path(pick('cache_dir', self.cache_dir)),
            jobs=int(pick('jobs', self.jobs)),
            formula_mode=str(pick('mode', self.formula_mode)),
            budget=int(pick('budget', self.oracle_budget)),
            prune=not bool(flags.get('no_prune', False)),
            oracle_check=int(flags.get('oracle_check') or 0),
            symmetric_oracle=bool(flags.get('symmetric', False)),
            n_values=n_values or (n,),
            clean_cache=bool(flags.get('clean_cache', False)),
        )

# Global config instance
config = Config()
