#!/usr/bin/env python3
"""
Elimination - Alt-rezultant PRS ile rezultant, diskriminant ve CAD izdüşümü

Ağır hesaplar sympy'nin tamsayı katsayılı alt-rezultant dizisine bırakılır;
her rezultantın içeriği atılır (ilkel kısım tutulur). Faktör kümeleri ikişer
aralarında asal hale ``coprime_base`` ile getirilir.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import sympy
from sympy import Poly

from config import constants
from core.exceptions import EliminationError
from core.polycore import (
    MultiPoly,
    UniPoly,
    _ordered,
    multi_gcd,
    multi_quotient,
    multi_irreducible_factors,
    to_rational,
)

logger = logging.getLogger(__name__)

Tagged = Tuple[MultiPoly, FrozenSet[str], int]


@dataclass
class EliminationTrace:
    """
    Tek bir eliminasyonun hata ayıklama kaydı.

    Attributes:
        f (MultiPoly): birinci girdi
        g (MultiPoly): ikinci girdi
        variable (str): elenen değişken
        psc (List[MultiPoly]): ana alt-rezultant katsayıları (artan derece, psc[0] = rezultant)
        resultant (MultiPoly): ilkel kısmı alınmış rezultant
    """
    f: MultiPoly
    g: MultiPoly
    variable: str
    psc: List[MultiPoly] = field(default_factory=list)
    resultant: Optional[MultiPoly] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            'f': self.f.to_json(),
            'g': self.g.to_json(),
            'variable': self.variable,
            'psc': [p.to_json() for p in self.psc],
            'resultant': None if self.resultant is None else self.resultant.to_json(),
        }


def _integer_pair(f: MultiPoly, g: MultiPoly, var: str) -> Tuple[Poly, Poly, Tuple[str, ...]]:
    """f ve g'yi (var, diğerleri...) üreteçleriyle ZZ üzerinde Poly'ye çevirir."""
    rest = tuple(v for v in _ordered(f.variables + g.variables) if v != var)
    gens = (var,) + rest
    _, fz = f.to_sympy(gens).clear_denoms(convert=True)
    _, gz = g.to_sympy(gens).clear_denoms(convert=True)
    return fz, gz, gens


def _from_result(value) -> MultiPoly:
    """sympy rezultant çıktısı (Poly ya da sayı) -> MultiPoly."""
    if isinstance(value, Poly):
        return MultiPoly.from_sympy(value)
    return MultiPoly.constant(to_rational(sympy.sympify(value)))


def resultant(f: MultiPoly, g: MultiPoly, var: str, normalize: bool = True,
              trace: bool = False) -> Union[MultiPoly, EliminationTrace]:
    """
    Res_var(f, g); alt-rezultant PRS ile, işaret ve sabit çarpan farkıyla.

    Args:
        f (MultiPoly): birinci polinom
        g (MultiPoly): ikinci polinom
        var (str): elenecek değişken
        normalize (bool): sonucu ilkel kısma indir (varsayılan)
        trace (bool): True ise EliminationTrace döndür

    Returns:
        MultiPoly: var içermeyen rezultant (ya da trace)

    Raises:
        EliminationError: var iki girdide de yoksa
    """
    if not f.occurs(var) and not g.occurs(var):
        raise EliminationError(constants.ERROR_VARIABLE_ABSENT.format(var=var))
    if f.is_zero or g.is_zero:
        res = MultiPoly.constant(0)
        return EliminationTrace(f, g, var, [], res) if trace else res

    fz, gz, _ = _integer_pair(f, g, var)
    res = _from_result(fz.resultant(gz))
    if normalize:
        res = res.primitive()
    logger.debug(f"Res_{var}: deg {f.degree(var)} x {g.degree(var)} -> {res.total_degree}. derece")
    if not trace:
        return res
    return EliminationTrace(f, g, var, subresultant_coefficients(f, g, var), res)


def subresultant_coefficients(f: MultiPoly, g: MultiPoly, var: str) -> List[MultiPoly]:
    """
    Ana alt-rezultant katsayıları (PSC), artan derecede; psc[0] rezultanttır.

    Alt-rezultant polinomları sympy'nin alt-rezultant PRS'inden, derece
    atlamalarında baş katsayının uygun kuvvetiyle çarpılarak elde edilir.
    """
    if f.degree(var) < g.degree(var):
        f, g = g, f
    fz, gz, _ = _integer_pair(f, g, var)
    prs = fz.subresultants(gz)
    dg = gz.degree(0)
    if len(prs) <= 1 or dg <= 0:
        return []
    subres: List[Optional[Poly]] = [None] * (dg + 1)
    for i in reversed(range(2, len(prs))):
        prev_deg = prs[i - 1].degree(0)
        subres[prev_deg - 1] = prs[i]
        cur_deg = prs[i].degree(0)
        if cur_deg < prev_deg - 1:
            jump = prev_deg - cur_deg - 1
            subres[cur_deg] = prs[i] * _leading_in_main(prs[i]) ** jump
    exponent = fz.degree(0) - dg - 1
    lead = _leading_in_main(gz)
    subres[-1] = prs[1] * (lead ** exponent) if exponent > 0 else prs[1]

    coefficients: List[MultiPoly] = []
    for i, sp in enumerate(subres):
        if sp is None:
            coefficients.append(MultiPoly.constant(0))
            continue
        coefficients.append(_coefficient_in_main(sp, i))
    return coefficients


def _leading_in_main(p: Poly) -> Poly:
    """Ana değişkene göre baş katsayı, aynı üreteçlerde Poly olarak."""
    d = p.degree(0)
    terms = {m: c for m, c in p.as_dict().items() if m[0] == d}
    shifted = {(0,) + m[1:]: c for m, c in terms.items()}
    return Poly.from_dict(shifted, *p.gens, domain=p.domain)


def _coefficient_in_main(p: Poly, k: int) -> MultiPoly:
    terms = {m[1:]: c for m, c in p.as_dict().items() if m[0] == k}
    names = [str(g) for g in p.gens[1:]]
    if not names:
        return MultiPoly.constant(to_rational(terms.get((), 0)))
    return MultiPoly(names, {m: to_rational(c) for m, c in terms.items()})


def discriminant(f: MultiPoly, var: str, normalize: bool = False) -> MultiPoly:
    """
    disc_var(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), kesin.

    Raises:
        EliminationError: var'a göre derece 0 ise
    """
    if f.degree(var) < 1:
        raise EliminationError(constants.ERROR_DEGREE_ZERO.format(var=var))
    rest = tuple(v for v in f.variables if v != var)
    gens = (var,) + rest
    disc = f.to_sympy(gens).discriminant()
    out = _from_result(disc)
    return out.primitive() if normalize else out


# -- ikişer aralarında asal taban -------------------------------------------

def _sort_key(p: MultiPoly) -> Tuple[int, str]:
    return (p.total_degree, p.canonical_key())


def coprime_base_tagged(items: Iterable[Tuple[MultiPoly, Iterable[str]]]) -> List[Tagged]:
    """
    Etiketli faktörleri Q üzerinde indirgenemez, ilkel ve ikişer aralarında asal bir tabana böler.

    Her girdi önce indirgenemez çarpanlarına ayrılır; ortak bölenler tekrarlı gcd ile
    ayrılır, ortak parçanın etiketleri birleştirilir ve katlılığı kaynaklardaki en
    büyük katlılık olur. Sabit faktörler atılır.
    Çıktı (toplam derece, kanonik anahtar) sırasındadır.

    Returns:
        List[Tuple[MultiPoly, FrozenSet[str], int]]: (faktör, etiketler, katlılık)
    """
    base: List[Tagged] = []
    for poly, tags in items:
        if poly.is_zero:
            continue
        tagset = frozenset(tags)
        for factor, k in multi_irreducible_factors(poly):
            base = _insert(base, factor, tagset, k)
    return sorted(base, key=lambda item: _sort_key(item[0]))


def _insert(base: List[Tagged], q: MultiPoly, tags: FrozenSet[str], k: int) -> List[Tagged]:
    out: List[Tagged] = []
    for r, rtags, rk in base:
        if q.is_constant:
            out.append((r, rtags, rk))
            continue
        g = multi_gcd(q, r)
        if g.is_constant:
            out.append((r, rtags, rk))
            continue
        rest = multi_quotient(r, g)
        if not rest.is_constant:
            out.append((rest.primitive(), rtags, rk))
        out.append((g.primitive(), rtags | tags, max(rk, k)))
        q = multi_quotient(q, g)
    if not q.is_constant:
        out.append((q.primitive(), tags, k))
    return out


def coprime_base(factors: Iterable[MultiPoly]) -> List[MultiPoly]:
    return [p for p, _, _ in coprime_base_tagged((f, ()) for f in factors)]


# -- CAD izdüşümü -------------------------------------------------------------

def cad_project(factors: Sequence[MultiPoly], var: str = 'b') -> List[UniPoly]:
    """
    Açık CAD için var'a (b) göre izdüşüm kümesi: baş katsayılar, diskriminantlar
    ve ikili rezultantlar; a'da tek değişkenli, karesiz, ikişer asal polinomlar.

    Args:
        factors (Sequence[MultiPoly]): {a, b} üzerindeki faktörler
        var (str): izdüşürülen değişken

    Returns:
        List[UniPoly]: a'ya göre polinomlar (sabitler atılır)

    Raises:
        ValueError: faktör listesi boşsa
    """
    if not factors:
        raise ValueError(constants.ERROR_EMPTY_FACTORS)
    base = coprime_base(factors)
    logger.info(constants.LOG_MSG_PROJECTION_START.format(count=len(base)))
    projection: List[MultiPoly] = []
    with_var = [f for f in base if f.occurs(var)]
    for f in base:
        if not f.occurs(var):
            projection.append(f)
            continue
        projection.append(f.leading_coefficient(var))
        if f.degree(var) >= 2:
            projection.append(discriminant(f, var))
    for i, f in enumerate(with_var):
        for g in with_var[i + 1:]:
            projection.append(resultant(f, g, var))

    parameter = _ordered(v for p in projection for v in p.variables)
    if len(parameter) > 1:
        raise ValueError(f"İzdüşüm tek değişkenli değil: {parameter}")
    return [p.as_univariate() for p in coprime_base(p for p in projection if not p.is_constant)]
