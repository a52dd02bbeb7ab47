"""
Hata sınıfları.

Hepsi yerleşik istisnalardan türer; ``ValueError`` yakalayan çağıranlar çalışmaya devam eder.
"""


class ZeroPolynomialError(ValueError):
    """Sıfır polinomun kabul edilmediği bir işleme sıfır polinom verildi."""


class NotSquarefreeError(ValueError):
    """Kök izolasyonuna karesiz olmayan polinom verildi."""


class EliminationError(ValueError):
    """Eliminasyon değişkeni girdilerde yok ya da derece 0."""


class InvalidMultiplicitiesError(ValueError):
    """Bölüntü çoklukları pozitif, artmayan ve toplamı n değil."""


class NonGenericPointError(ValueError):
    """(a, b) border polinomunun sıfır kümesinde ya da kutunun dışında."""


class DegenerateEliminationError(ArithmeticError):
    """Özelleştirilmiş eliminant özdeş olarak sıfır."""


class MissingPartitionError(KeyError):
    pass


class OracleBudgetError(RuntimeError):
    pass


class RationalParseError(ValueError):
    pass
