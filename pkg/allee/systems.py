#!/usr/bin/env python3
"""
Allee Systems - Tam denge sistemi, indirgenmiş G1/G2 sistemleri ve bölüntüler

n yamalı Allee modeli:
    dx_i/dt = x_i(1 - x_i)(x_i - b) - (n - 1) a x_i + a Σ_{j≠i} x_j

Bir denge noktasının koordinatları en fazla üç farklı değer alır; aynı değeri
alan koordinatlar birleştirilerek iki (G1) ya da üç (G2) değişkenli sistemler
elde edilir. Bu modül ayrıca sayım ve border polinomu için ortak eliminantları
(``Eliminant``) kurar.
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

from config import constants
from core.exceptions import InvalidMultiplicitiesError
from core.polycore import MultiPoly

logger = logging.getLogger(__name__)

KIND_G1 = "G1"
KIND_G2 = "G2"

A = MultiPoly.var('a')
B = MultiPoly.var('b')
Y = MultiPoly.var('y')
Z = MultiPoly.var('z')
W = MultiPoly.var('w')


def allee_cubic(x: MultiPoly) -> MultiPoly:
    """h(x) = x(1 - x)(x - b)."""
    return x * (1 - x) * (x - B)


def coupled_cubic(x: MultiPoly, n: int) -> MultiPoly:
    """g(x) = -h(x) + n a x; denge noktasında tüm koordinatlar için g(x_i) = a Σ x_j."""
    return -allee_cubic(x) + A.scale(n) * x


# -- sistemler ---------------------------------------------------------------

@dataclass(frozen=True)
class FullSystem:
    """
    n boyutlu denge sistemi f_1 = ... = f_n = 0.

    Attributes:
        n (int): yama sayısı
        equations (Tuple[MultiPoly, ...]): f_i(x_1..x_n, a, b)
    """
    n: int
    equations: Tuple[MultiPoly, ...]

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(f"x{i + 1}" for i in range(self.n))

    def evaluate(self, point: Sequence, a, b) -> List:
        bindings = {name: value for name, value in zip(self.variables, point)}
        bindings.update({'a': a, 'b': b})
        return [f.evaluate(bindings) for f in self.equations]


@dataclass(frozen=True)
class ReducedSystem:
    """
    Koordinatların iki ya da üç farklı değere indirgendiği sistem.

    Attributes:
        kind (str): "G1" veya "G2"
        multiplicities (Tuple[int, ...]): (n1, n2) ya da (n1, n2, n3)
        equations (Tuple[MultiPoly, ...]): G11, G12(, G13) ya da G21, G22, G23
    """
    kind: str
    multiplicities: Tuple[int, ...]
    equations: Tuple[MultiPoly, ...]

    @property
    def n(self) -> int:
        return sum(self.multiplicities)

    @property
    def state_variables(self) -> Tuple[str, ...]:
        return ('y', 'z') if self.kind == KIND_G1 else ('y', 'z', 'w')

    @property
    def label(self) -> str:
        return f"{self.kind}{self.multiplicities}"


@dataclass
class PartitionSet:
    """
    n'nin iki ve üç pozitif parçaya artmayan bölüntüleri.

    Attributes:
        n (int): yama sayısı
        pairs (List[Tuple[int, int]]): (n1, n2), n1 ≥ n2 > 0
        triples (List[Tuple[int, int, int]]): (n1, n2, n3), n1 ≥ n2 ≥ n3 > 0
    """
    n: int
    pairs: List[Tuple[int, int]] = field(default_factory=list)
    triples: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def remark_triple_count(self) -> int:
        """Kapalı form iddiası: n - 2 üçlü bölüntü."""
        return max(self.n - 2, 0)

    @property
    def remark_discrepancy(self) -> bool:
        return self.n >= 3 and len(self.triples) != self.remark_triple_count

    def all(self) -> List[Tuple[int, ...]]:
        return list(self.pairs) + list(self.triples)

    def to_dict(self) -> Dict[str, object]:
        return {
            'n': self.n,
            'pairs': [list(p) for p in self.pairs],
            'triples': [list(t) for t in self.triples],
            'remark_triple_count': self.remark_triple_count,
            'remark_discrepancy': self.remark_discrepancy,
        }


def build_full(n: int) -> FullSystem:
    """
    x_i(1 - x_i)(x_i - b) - (n - 1) a x_i + a Σ_{j≠i} x_j, i = 1..n.

    Raises:
        ValueError: n < 1
    """
    if n < 1:
        raise ValueError(constants.ERROR_BAD_N.format(n=n))
    xs = [MultiPoly.var(f"x{i + 1}") for i in range(n)]
    equations = []
    for i, x in enumerate(xs):
        coupling = MultiPoly.constant(0)
        for j, other in enumerate(xs):
            if j != i:
                coupling = coupling + other
        equations.append(allee_cubic(x) - A.scale(n - 1) * x + A * coupling)
    return FullSystem(n, tuple(equations))


def _check_multiplicities(n: int, multiplicities: Sequence[int], sorted_required: bool) -> Tuple[int, ...]:
    mults = tuple(int(m) for m in multiplicities)
    valid = len(mults) in (2, 3) and all(m > 0 for m in mults) and sum(mults) == n
    if valid and sorted_required:
        valid = all(mults[i] >= mults[i + 1] for i in range(len(mults) - 1))
    if not valid:
        raise InvalidMultiplicitiesError(
            constants.ERROR_BAD_MULTIPLICITIES.format(multiplicities=mults, n=n)
        )
    return mults


def build_reduced(n: int, multiplicities: Sequence[int]) -> ReducedSystem:
    """
    İlk n1 koordinatı y, sonraki n2 koordinatı z (ve n3 koordinatı w) yaparak indirger.

    G1 için çoklukların sırası serbesttir (G1(n1,n2)(y,z) = G1(n2,n1)(z,y) simetrisi
    testlerde kullanılır); G2 için n1 ≥ n2 ≥ n3 zorunludur.

    Args:
        n (int): yama sayısı
        multiplicities (Sequence[int]): (n1, n2) ya da (n1, n2, n3)

    Returns:
        ReducedSystem: G1 ya da G2

    Raises:
        InvalidMultiplicitiesError: çokluklar geçersizse
    """
    mults = _check_multiplicities(n, multiplicities, sorted_required=len(tuple(multiplicities)) == 3)
    values = [Y, Z, W][:len(mults)]
    total = MultiPoly.constant(0)
    for m, v in zip(mults, values):
        total = total + v.scale(m)
    equations = tuple(allee_cubic(v) - A.scale(n) * v + A * total for v in values)
    kind = KIND_G1 if len(mults) == 2 else KIND_G2
    return ReducedSystem(kind, mults, equations)


def partitions(n: int) -> PartitionSet:
    """
    n'nin 2 ve 3 parçalı artmayan bölüntülerini kapsamlı olarak sayar.

    Üçlü bölüntü sayısı ile "n - 2" kapalı formu uyuşmazsa uyarı loglanır.
    """
    pairs = [(n - k, k) for k in range(1, n // 2 + 1)]
    triples = []
    for n3 in range(1, n // 3 + 1):
        for n2 in range(n3, (n - n3) // 2 + 1):
            n1 = n - n2 - n3
            if n1 >= n2:
                triples.append((n1, n2, n3))
    triples.sort(reverse=True)
    result = PartitionSet(n, pairs, triples)
    if result.remark_discrepancy:
        logger.warning(constants.LOG_MSG_PARTITION_REMARK.format(
            n=n, actual=len(triples), remark=result.remark_triple_count))
    return result


def determinant(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Kofaktör açılımı; küçük (≤ 4) matrisler için."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    if size == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = MultiPoly.constant(0)
    for j in range(size):
        entry = matrix[0][j]
        if entry.is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def jacobian(sys: ReducedSystem) -> MultiPoly:
    """Durum değişkenlerine göre Jacobi matrisinin determinantı."""
    matrix = [[eq.derivative(v) for v in sys.state_variables] for eq in sys.equations]
    return determinant(matrix)


def swap_images(sys: ReducedSystem) -> List[ReducedSystem]:
    """Eşit çokluklu değişkenlerin yer değiştirmesiyle elde edilen sistemler (simetri denetimi için)."""
    names = sys.state_variables
    images = []
    for perm in permutations(range(len(names))):
        if all(sys.multiplicities[i] == sys.multiplicities[p] for i, p in enumerate(perm)):
            renamed = {names[i]: MultiPoly.var(names[p]) for i, p in enumerate(perm)}
            images.append(ReducedSystem(sys.kind, sys.multiplicities,
                                        tuple(eq.substitute(renamed) for eq in sys.equations)))
    return images


# -- eliminantlar -------------------------------------------------------------

@dataclass(frozen=True)
class Eliminant:
    """
    İndirgenmiş sistemin y'de tek değişkenli (a, b parametreli) eliminantı ve yan koşulları.

    Attributes:
        system (ReducedSystem): kaynak sistem
        polynomial (MultiPoly): pozitif kökleri sayılan polinom (y, a, b)
        core (MultiPoly): border polinomunun kurulduğu çekirdek (G1'de P'nin köşegen dışı çarpanı)
        positivity (Tuple[Tuple[str, MultiPoly], ...]): kökte > 0 olması gereken ifadeler
        distinctness (Tuple[Tuple[str, MultiPoly], ...]): kökte ≠ 0 olması gereken ifadeler
        solutions_per_root (int): her geçerli kökün verdiği sıralı çözüm sayısı
    """
    system: ReducedSystem
    polynomial: MultiPoly
    core: MultiPoly
    positivity: Tuple[Tuple[str, MultiPoly], ...]
    distinctness: Tuple[Tuple[str, MultiPoly], ...]
    solutions_per_root: int = 1

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return self.system.multiplicities

    @property
    def side_conditions(self) -> List[Tuple[str, MultiPoly]]:
        return list(self.positivity) + list(self.distinctness)


def g1_eliminant(n1: int, n2: int) -> Eliminant:
    """
    G11'den z = y - h(y)/(a n2) doğrusal çözülür ve G12'ye konur.

    Payda temizlenince P(y) = n2 Zn (a n2 - Zn)(Zn - a b n2) + n1 (a n2)^3 h(y)
    elde edilir; P = h(y) Q(y) ayrışır ve Q'nun başkatsayısı n2'dir.
    """
    sys = build_reduced(n1 + n2, (n1, n2))
    an2 = A.scale(n2)
    h = allee_cubic(Y)
    z_num = an2 * Y - h
    u1 = an2 - (1 - Y) * (Y - B)
    u2 = an2 + Y * (Y - B)
    u3 = an2 - Y * (1 - Y)
    core = (u1 * u2 * u3).scale(n2) + (an2 ** 3).scale(n1)
    return Eliminant(
        system=sys,
        polynomial=h * core,
        core=core,
        positivity=(('z', z_num),),
        distinctness=(('y-z', h),),
    )


def g2_eliminant(n1: int, n2: int, n3: int) -> Eliminant:
    """
    Üç farklı değer y, z, w, g(v) = K kübiğinin kökleridir:
        y + z + w = 1 + b,  yz + yw + zw = b + n a,  yzw = a(n1 y + n2 z + n3 w).
    w ilk denklemden elenir; K(y, z) ile indirgenen üçüncü denklem z'de doğrusaldır:
        a (n2 - n3) z = Zn(y).
    n2 ≠ n3 ise z yerine konup altıncı dereceden T(y) bulunur; n2 = n3 ise Zn(y) = 0
    kübiği y'yi belirler ve z, w ikinci dereceden denklemin iki kökü olur.
    """
    sys = build_reduced(n1 + n2 + n3, (n1, n2, n3))
    n = n1 + n2 + n3
    d = n2 - n3
    one_b = 1 + B
    z_num = Y ** 3 - one_b * Y ** 2 + (B + A.scale(n2 + 2 * n3)) * Y - A.scale(n3) * one_b
    if d:
        ad = A.scale(d)
        k_form = (ad ** 2) * (one_b * Y - Y ** 2 - B - A.scale(n)) + ad * (one_b - Y) * z_num - z_num ** 2
        w_num = ad * (one_b - Y) - z_num
        return Eliminant(
            system=sys,
            polynomial=k_form,
            core=k_form,
            positivity=(('z', z_num), ('w', w_num)),
            distinctness=(('y-z', ad * Y - z_num), ('y-w', ad * Y - w_num), ('z-w', z_num - w_num)),
        )
    pair_sum = one_b - Y
    pair_product = Y ** 2 - one_b * Y + B + A.scale(n)
    spread = pair_sum ** 2 - pair_product.scale(4)
    tangency = one_b.scale(2) * Y - (Y ** 2).scale(3) - B - A.scale(n)
    return Eliminant(
        system=sys,
        polynomial=z_num,
        core=z_num,
        positivity=(('z-w spread', spread), ('z+w', pair_sum), ('zw', pair_product)),
        distinctness=(('y-zw', tangency),),
        solutions_per_root=2,
    )


def eliminant(multiplicities: Sequence[int]) -> Eliminant:
    mults = tuple(multiplicities)
    if len(mults) == 2:
        return g1_eliminant(*mults)
    if len(mults) == 3:
        return g2_eliminant(*mults)
    raise InvalidMultiplicitiesError(
        constants.ERROR_BAD_MULTIPLICITIES.format(multiplicities=mults, n=sum(mults)))
