#!/usr/bin/env python3
"""
Uygulama genelinde kullanılacak sabit (constant) değerler.
Bu dosya, "magic string" ve "magic number" kullanımını önleyerek
kodun okunabilirliğini ve bakımını kolaylaştırmayı amaçlar.
"""

from fractions import Fraction

# Uygulama
APP_NAME = "allee-rrc"
APP_DESCRIPTION = "Allee etkili n-yama sisteminin (a, b) parametre düzlemi sınıflandırması"

# Border polinomu semantiği her değiştiğinde artırılır (cache anahtarının parçası)
ALGORITHM_VERSION = 4

# Değişken sırası (eliminasyon her zaman önce durum değişkenlerini siler)
VARIABLE_ORDER = ('y', 'z', 'w', 'a', 'b', 'n1', 'n2', 'n3')

# Parametre kutusu
DEFAULT_B_LOW = Fraction(0)
DEFAULT_B_HIGH = Fraction(1, 2)
DEFAULT_A_LOW = Fraction(0)
DEFAULT_B_RANGE = (DEFAULT_B_LOW, DEFAULT_B_HIGH)
AMAX_AUTO = "auto"

# Referans örnek nokta (n = 4)
REFERENCE_SAMPLE_A = Fraction(1319, 1048576)
REFERENCE_SAMPLE_B = Fraction(363843, 2097152)
CLAIMED_TOTAL = 81

# Sayım modları
FORMULA_MODE_DEDUP = "dedup"
FORMULA_MODE_PAPER = "paper"
FORMULA_MODES = [FORMULA_MODE_DEDUP, FORMULA_MODE_PAPER]
TRIVIAL_STEADY_STATES = 3

# Provenance etiketleri
TAG_JACOBIAN = "jacobian-locus"
TAG_BOUNDARY = "boundary-x=0"
TAG_COINCIDENCE = "coincidence"
TAG_LEADING = "leading-coeff"
TAG_TRIVIAL = "trivial"

# Kök izolasyonu
DEFAULT_REFINE_WIDTH = Fraction(1, 10 ** 6)

# Oracle (aralık çözücü)
DEFAULT_ORACLE_BUDGET = 400000
DEFAULT_ORACLE_PRECISION_BITS = 64
ORACLE_REGION_MARGIN = Fraction(1, 64)
ORACLE_STEADY_STATE_BOUND = Fraction(1)
ORACLE_NEWTON_WIDTH = Fraction(1, 16)
ORACLE_MIN_WIDTH = Fraction(1, 2 ** 40)
ORACLE_INFLATION = Fraction(1, 8)
ORACLE_CLUSTER_STEPS = 60
ORACLE_TIGHTEN_STEPS = 8
ORACLE_MAX_COMPLETE_N = 4
BOX_UNIQUE_ROOT = "unique-root"
BOX_UNRESOLVED = "unresolved"

# Render
DEFAULT_SVG_COLUMNS = 600
PLOT_AMAX_FACTOR = Fraction(5, 4)
CELL_COLORMAP = "viridis"

# Dosya Adları ve Yolları
DEFAULT_CACHE_DIR = "bp_cache"
DEFAULT_OUT_DIR = "reports"
BP_CACHE_FILENAME = "bp_n{n}_v{version}.json"
BP_CACHE_FILENAME_PRUNED = "bp_n{n}_v{version}_pruned.json"
REPORT_JSON_FILENAME = "classification_n{n}.json"
CELLS_CSV_FILENAME = "cells_n{n}.csv"
REPORT_SVG_FILENAME = "classification_n{n}.svg"
TIMING_CSV_FILENAME = "bp_timings.csv"
BP_SUMMARY_CSV_FILENAME = "bp_n{n}_factors.csv"
ORACLE_JSON_FILENAME = "oracle_n{n}.json"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Çıkış kodları
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_NON_GENERIC = 2
EXIT_ORACLE_INCOMPLETE = 3
EXIT_IO_ERROR = 4

# Hata Mesajları
ERROR_ZERO_POLYNOMIAL = "Sıfır polinom kabul edilmiyor: {context}"
ERROR_NOT_SQUAREFREE = "Polinom karesiz değil (önce gcd_and_squarefree uygulayın): {poly}"
ERROR_VARIABLE_ABSENT = "{var} değişkeni iki polinomda da yok"
ERROR_DEGREE_ZERO = "{var} değişkenine göre derece 0, diskriminant tanımsız"
ERROR_UNKNOWN_VARIABLE = "Bilinmeyen değişken: {var}"
ERROR_BAD_MULTIPLICITIES = "Geçersiz çokluklar {multiplicities} (n={n})"
ERROR_BAD_N = "n pozitif olmalı, verilen: {n}"
ERROR_NON_GENERIC = "Jenerik olmayan nokta (a={a}, b={b}): {reason}"
ERROR_OUTSIDE_BOX = "Nokta kutunun dışında: a={a}, b={b} (a > 0, 0 < b < 1/2 gerekli)"
ERROR_DEGENERATE_ELIMINATION = "Eliminasyon özdeş olarak sıfır: {system}"
ERROR_MISSING_PARTITION = "Eksik bölüntü sayımı: {partition}"
ERROR_EMPTY_FACTORS = "Faktör listesi boş"
ERROR_BP_ZERO_ON_BOX = "Border polinomu kutu üzerinde özdeş olarak sıfır"
ERROR_RATIONAL_PARSE = "Rasyonel sayı 'pay/payda' biçiminde olmalı, ondalık kabul edilmez: {text}"
ERROR_AMAX_NOT_POSITIVE = "amax pozitif olmalı: {amax}"
ERROR_BAD_B_RANGE = "b aralığı 0 ≤ b_lo < b_hi ≤ 1/2 olmalı: {box}"
ERROR_UNKNOWN_MODE = "Bilinmeyen formül modu: {mode}"
ERROR_CACHE_WRITE = "Cache yazma hatası {path}: {error}"
ERROR_REPORT_WRITE = "Rapor yazma hatası {path}: {error}"
ERROR_REPORT_READ = "Rapor okuma hatası {path}: {error}"
ERROR_ORACLE_DIMENSION = "Oracle n ≤ {limit} için tamlık garantisi verir, verilen n={n}"

# Log ve Rapor Mesajları
LOG_MSG_BP_PARTITION_START = "🧮 {kind}{multiplicities} için border polinomu hesaplanıyor..."
LOG_MSG_BP_PARTITION_DONE = "✅ {kind}{multiplicities}: {count} faktör ({seconds:.2f}s)"
LOG_MSG_BP_TOTAL_DONE = "📐 bp(a,b;{n}): {count} ikişer aralarında asal faktör ({seconds:.2f}s)"
LOG_MSG_BP_PRUNED = "✂️ Kutu içinde kökü olmayan faktör atıldı: {factor}"
LOG_MSG_PARTITION_REMARK = "⚠️ n={n} için üçlü bölüntü sayısı {actual}, n-2={remark} ile uyuşmuyor"
LOG_MSG_CACHE_HIT = "💾 Cache isabeti: {key}"
LOG_MSG_CACHE_MISS = "🔍 Cache'te yok: {key}"
LOG_MSG_CACHE_SAVED = "💾 Cache kaydedildi: {path}"
LOG_MSG_CACHE_CORRUPT = "⚠️ Bozuk cache dosyası yok sayılıyor: {path} ({error})"
LOG_MSG_CACHE_CLEANED = "🧹 {count} eski cache dosyası silindi"
LOG_MSG_PROJECTION_START = "🔻 {count} faktör b'ye göre izdüşürülüyor..."
LOG_MSG_PROJECTION_DONE = "🔻 İzdüşüm: {count} polinom, {roots} kritik a değeri ({seconds:.2f}s)"
LOG_MSG_AMAX = "📏 A_max = {amax}"
LOG_MSG_STACKS_DONE = "🧱 {stacks} yığın, {cells} açık hücre örneği"
LOG_MSG_COUNT_START = "🔢 {cells} örnek noktada sayım başlıyor (jobs={jobs})"
LOG_MSG_COUNT_DONE = "🔢 Sayım tamamlandı: farklı toplamlar {totals} ({seconds:.2f}s)"
LOG_MSG_COUNT_POINT = "🔢 (a={a}, b={b}) {kind}{multiplicities}: toplam={total}, köşegen dışı={off}"
LOG_MSG_ORACLE_FALLBACK = "⚠️ Dejenere eliminasyon, oracle'a geçiliyor: {system}"
LOG_MSG_ORACLE_START = "🛰️ Oracle başlıyor: n={n}, a={a}, b={b}, bütçe={budget}"
LOG_MSG_ORACLE_DONE = "🛰️ Oracle: {count} kök, tam={complete}, {boxes} kutu işlendi ({seconds:.2f}s)"
LOG_MSG_ORACLE_BOUND_VIOLATION = "❌ Kök arama sınırının dışında: {box}"
LOG_MSG_ORACLE_CHECK = "🛰️ Hücre {cell_id}: oracle={oracle}, dedup={dedup}"
LOG_MSG_REPORT_SAVED = "📁 Rapor kaydedildi: {path}"
LOG_MSG_FIGURE_SAVED = "🖼️ Şekil kaydedildi: {path}"
LOG_MSG_EXCEL_EXPORT_SUCCESS = "📊 Excel dosyası kaydedildi: {filename}"
LOG_MSG_EXCEL_EXPORT_ERROR = "❌ Excel export hatası: {error}"
LOG_MSG_CROSS_CHECK_FAILED = "❌ Descartes/Sturm uyuşmazlığı: {descartes} != {sturm} ({poly})"
LOG_MSG_CONFIG_FILE = "⚙️ Konfigürasyon dosyası okundu: {path}"
LOG_MSG_UNEXPECTED_ERROR = "❌ Beklenmeyen hata: {error}"
LOG_MSG_BP_TIMING = "⏱️ n={n}: {count} faktör, {pruned} atıldı, {seconds:.2f}s (cache={hit})"
LOG_MSG_ORACLE_INCOMPLETE = "⚠️ Oracle tamamlanamadı: {count} çözülemeyen kutu"
LOG_MSG_ORACLE_MISMATCH = "❌ Oracle ile dedup uyuşmuyor: {cells}"
LOG_MSG_NON_GENERIC = "⚠️ {error}"

# Rapor
PRINTED_BINOMIALS = {(2, 2): 6, (3, 1): 3, (2, 1, 1): 12}
DISCREPANCY_NOTE = (
    "Basılı binomlarla toplam {printed}, beyan edilen toplam {claimed}; "
    "kapalı formül harfiyen {literal}, dedup/oracle {dedup}"
)
