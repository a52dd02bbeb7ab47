#!/usr/bin/env python3
"""
Polycore - Kesin rasyonel skalerler, rasyonel uçlu aralıklar ve polinom aritmetiği

Seyrek çok değişkenli polinomlar (MultiPoly) ve yoğun tek değişkenli polinomlar
(UniPoly) burada tanımlanır. Toplama, çarpma, türev ve yerine koyma saf Python
sözlük aritmetiğiyle yapılır; gcd, karesiz ayrıştırma ve bölme gibi ağır işler
sympy'ye devredilir.
"""

import json
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy
from sympy import Poly, QQ

from config import constants
from core.exceptions import ZeroPolynomialError

logger = logging.getLogger(__name__)

Rational = Fraction
Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

_STATE_PATTERN = re.compile(r'^x(\d+)$')


def to_rational(value) -> Fraction:
    """int, Fraction, sympy sayısı veya gmpy/python mpq değerini Fraction'a çevirir."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Basic):
        value = sympy.Rational(value)
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"Rasyonel olmayan katsayı: {value!r}")


def to_sympy_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def variable_rank(name: str) -> Tuple[int, int]:
    """Kanonik değişken sırası: x1..xn, ardından (y, z, w, a, b, n1, n2, n3)."""
    match = _STATE_PATTERN.match(name)
    if match:
        return (0, int(match.group(1)))
    if name in constants.VARIABLE_ORDER:
        return (1, constants.VARIABLE_ORDER.index(name))
    raise ValueError(constants.ERROR_UNKNOWN_VARIABLE.format(var=name))


def _ordered(names: Iterable[str]) -> Tuple[str, ...]:
    return tuple(sorted(set(names), key=variable_rank))


def _deglex_key(exponent: Exponent) -> Tuple[int, Exponent]:
    return (sum(exponent), exponent)


def floor_dyadic(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(math.floor(x * scale), scale)


def ceil_dyadic(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(math.ceil(x * scale), scale)


@dataclass(frozen=True)
class RatInterval:
    """Rasyonel uçlu kapalı aralık [lo, hi]."""
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'lo', to_rational(self.lo))
        object.__setattr__(self, 'hi', to_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"Geçersiz aralık: lo={self.lo} > hi={self.hi}")

    @classmethod
    def point(cls, x: Scalar) -> 'RatInterval':
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Scalar) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def overlaps(self, other: 'RatInterval') -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def within(self, other: 'RatInterval') -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def strictly_within(self, other: 'RatInterval') -> bool:
        return other.lo < self.lo and self.hi < other.hi

    def intersect(self, other: 'RatInterval') -> Optional['RatInterval']:
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return RatInterval(lo, hi) if lo <= hi else None

    def hull(self, other: 'RatInterval') -> 'RatInterval':
        return RatInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def inflate(self, ratio: Fraction) -> 'RatInterval':
        pad = self.width * ratio
        return RatInterval(self.lo - pad, self.hi + pad)

    def bisect(self, at: Optional[Fraction] = None) -> Tuple['RatInterval', 'RatInterval']:
        cut = self.midpoint if at is None else at
        return RatInterval(self.lo, cut), RatInterval(cut, self.hi)

    def round_outward(self, bits: int) -> 'RatInterval':
        """Uçları 2^-bits ızgarasına dışa doğru yuvarlar (hassasiyet sınırlama)."""
        return RatInterval(floor_dyadic(self.lo, bits), ceil_dyadic(self.hi, bits))

    @staticmethod
    def _coerce(other) -> 'RatInterval':
        if isinstance(other, RatInterval):
            return other
        return RatInterval.point(to_rational(other))

    def __add__(self, other) -> 'RatInterval':
        other = self._coerce(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other) -> 'RatInterval':
        other = self._coerce(other)
        return RatInterval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other) -> 'RatInterval':
        return self._coerce(other) - self

    def __neg__(self) -> 'RatInterval':
        return RatInterval(-self.hi, -self.lo)

    def __mul__(self, other) -> 'RatInterval':
        other = self._coerce(other)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(products), max(products))

    __rmul__ = __mul__

    def square(self) -> 'RatInterval':
        if self.lo >= 0:
            return RatInterval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return RatInterval(self.hi * self.hi, self.lo * self.lo)
        return RatInterval(Fraction(0), max(self.lo * self.lo, self.hi * self.hi))

    def to_dict(self) -> Dict[str, str]:
        return {'lo': str(self.lo), 'hi': str(self.hi)}

    def __str__(self) -> str:
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]"


@dataclass(frozen=True)
class UniPoly:
    """
    Yoğun tek değişkenli polinom; katsayılar dereceye göre artan sırada.

    Attributes:
        variable (str): değişken adı
        coefficients (Tuple[Fraction, ...]): coefficients[k] = x^k katsayısı, sondaki sıfırlar kırpılır
    """
    variable: str
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [to_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coefficients', tuple(coeffs))

    @classmethod
    def from_roots(cls, variable: str, roots: Sequence[Scalar], scale: Scalar = 1) -> 'UniPoly':
        poly = cls(variable, (to_rational(scale),))
        for r in roots:
            poly = poly * cls(variable, (-to_rational(r), Fraction(1)))
        return poly

    @classmethod
    def from_sympy(cls, poly: Poly, variable: Optional[str] = None) -> 'UniPoly':
        name = variable or str(poly.gens[0])
        coeffs = [to_rational(c) for c in reversed(poly.all_coeffs())]
        return cls(name, tuple(coeffs))

    @classmethod
    def from_expr(cls, expr, variable: str) -> 'UniPoly':
        return cls.from_sympy(Poly(expr, sympy.Symbol(variable), domain=QQ), variable)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def evaluate(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def sign_at_rational(self, x: Fraction) -> int:
        """Tam sayı Horner ile p(x)'in işareti; kesir aritmetiği olmadan."""
        num, den = x.numerator, x.denominator
        ints = self.integer_coefficients
        acc = 0
        power = 1
        degree = len(ints) - 1
        # sum c_k num^k den^(d-k), den > 0 olduğundan işaret korunur
        den_powers = [1] * (degree + 1)
        for k in range(1, degree + 1):
            den_powers[k] = den_powers[k - 1] * den
        for k, c in enumerate(ints):
            if c:
                acc += c * power * den_powers[degree - k]
            power *= num
        return (acc > 0) - (acc < 0)

    @cached_property
    def integer_coefficients(self) -> Tuple[int, ...]:
        """Paydaları temizlenmiş, içeriği bölünmüş tamsayı katsayılar (artan)."""
        if not self.coefficients:
            return ()
        lcm = 1
        for c in self.coefficients:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coefficients]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        return tuple(ints)

    def derivative(self) -> 'UniPoly':
        return UniPoly(self.variable, tuple(k * c for k, c in enumerate(self.coefficients) if k > 0))

    def primitive(self) -> 'UniPoly':
        """İçeriği 1, baş katsayısı pozitif tamsayı katsayılı eşdeğer polinom."""
        ints = self.integer_coefficients
        sign = -1 if ints and ints[-1] < 0 else 1
        return UniPoly(self.variable, tuple(Fraction(sign * v) for v in ints))

    def _shared_variable(self, other: 'UniPoly') -> str:
        if other.variable != self.variable and other.degree > 0 and self.degree > 0:
            raise ValueError(f"Farklı değişkenler: {self.variable} / {other.variable}")
        return self.variable if self.degree > 0 else other.variable

    def __add__(self, other: 'UniPoly') -> 'UniPoly':
        variable = self._shared_variable(other)
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return UniPoly(variable, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> 'UniPoly':
        return UniPoly(self.variable, tuple(-c for c in self.coefficients))

    def __sub__(self, other: 'UniPoly') -> 'UniPoly':
        return self + (-other)

    def __mul__(self, other: Union['UniPoly', Scalar]) -> 'UniPoly':
        if not isinstance(other, UniPoly):
            k = to_rational(other)
            return UniPoly(self.variable, tuple(c * k for c in self.coefficients))
        variable = self._shared_variable(other)
        if self.is_zero or other.is_zero:
            return UniPoly(variable, ())
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, c in enumerate(self.coefficients):
            if c:
                for j, d in enumerate(other.coefficients):
                    out[i + j] += c * d
        return UniPoly(variable, tuple(out))

    __rmul__ = __mul__

    def to_sympy(self) -> Poly:
        gen = sympy.Symbol(self.variable)
        if self.is_zero:
            return Poly(0, gen, domain=QQ)
        return Poly([to_sympy_rational(c) for c in reversed(self.coefficients)], gen, domain=QQ)

    def to_multi(self) -> 'MultiPoly':
        return MultiPoly.from_dict((self.variable,), {(k,): c for k, c in enumerate(self.coefficients)})

    def __str__(self) -> str:
        return str(self.to_sympy().as_expr())


class MultiPoly:
    """
    Rasyonel katsayılı seyrek çok değişkenli polinom.

    Kanonik biçim: yalnızca gerçekten geçen değişkenler tutulur (kanonik sırada),
    sıfır katsayı saklanmaz, terimler derece-leksikografik sırada serileştirilir.
    Nesneler oluşturulduktan sonra değişmez.
    """

    __slots__ = ('_variables', '_terms', '_hash')

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Scalar]):
        variables = tuple(variables)
        order = _ordered(variables)
        if order != variables:
            perm = [variables.index(v) for v in order]
            terms = {tuple(e[i] for i in perm): c for e, c in terms.items()}
            variables = order
        cleaned: Dict[Exponent, Fraction] = {}
        for exp, coeff in terms.items():
            if len(exp) != len(variables):
                raise ValueError(f"Üs vektörü uzunluğu {len(exp)} != {len(variables)}")
            c = to_rational(coeff)
            if c:
                cleaned[tuple(exp)] = cleaned.get(tuple(exp), Fraction(0)) + c
        cleaned = {e: c for e, c in cleaned.items() if c}
        used = [i for i in range(len(variables)) if any(e[i] for e in cleaned)]
        if len(used) != len(variables):
            variables = tuple(variables[i] for i in used)
            cleaned = {tuple(e[i] for i in used): c for e, c in cleaned.items()}
        self._variables = variables
        self._terms = cleaned
        self._hash = None

    # -- yapıcılar -------------------------------------------------------
    @classmethod
    def from_dict(cls, variables: Sequence[str], terms: Mapping[Exponent, Scalar]) -> 'MultiPoly':
        return cls(variables, terms)

    @classmethod
    def constant(cls, value: Scalar) -> 'MultiPoly':
        return cls((), {(): value})

    @classmethod
    def var(cls, name: str) -> 'MultiPoly':
        variable_rank(name)
        return cls((name,), {(1,): 1})

    @classmethod
    def from_expr(cls, expr) -> 'MultiPoly':
        expr = sympy.sympify(expr)
        symbols = sorted((str(s) for s in expr.free_symbols), key=variable_rank)
        if not symbols:
            return cls.constant(to_rational(expr))
        return cls.from_sympy(Poly(expr, *[sympy.Symbol(s) for s in symbols], domain=QQ))

    @classmethod
    def from_sympy(cls, poly: Poly) -> 'MultiPoly':
        names = [str(g) for g in poly.gens]
        return cls(names, {m: to_rational(c) for m, c in poly.as_dict(native=False).items()})

    # -- erişim ----------------------------------------------------------
    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._variables

    @property
    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"Sabit değil: {self}")
        return self._terms.get((), Fraction(0))

    def occurs(self, var: str) -> bool:
        return var in self._variables

    def degree(self, var: str) -> int:
        if var not in self._variables:
            return 0 if self._terms else -1
        i = self._variables.index(var)
        return max(e[i] for e in self._terms)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: _deglex_key(item[0]), reverse=True)

    @property
    def leading_term_coefficient(self) -> Fraction:
        return self.sorted_terms()[0][1] if self._terms else Fraction(0)

    def coefficients_in(self, var: str) -> Dict[int, 'MultiPoly']:
        """var'ın kuvvetlerine göre katsayılar: {k: c_k(diğer değişkenler)}."""
        if var not in self._variables:
            return {0: self} if self._terms else {}
        i = self._variables.index(var)
        rest = self._variables[:i] + self._variables[i + 1:]
        buckets: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self._terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: MultiPoly(rest, t) for k, t in buckets.items()}

    def leading_coefficient(self, var: str) -> 'MultiPoly':
        coeffs = self.coefficients_in(var)
        if not coeffs:
            return MultiPoly.constant(0)
        return coeffs[max(coeffs)]

    # -- aritmetik -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, UniPoly):
            return other.to_multi()
        return MultiPoly.constant(to_rational(other))

    def _lift(self, variables: Tuple[str, ...]) -> Dict[Exponent, Fraction]:
        if variables == self._variables:
            return self._terms
        idx = [variables.index(v) for v in self._variables]
        lifted = {}
        for e, c in self._terms.items():
            full = [0] * len(variables)
            for pos, k in zip(idx, e):
                full[pos] = k
            lifted[tuple(full)] = c
        return lifted

    def _context(self, other: 'MultiPoly') -> Tuple[str, ...]:
        return _ordered(self._variables + other._variables)

    def __add__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        ctx = self._context(other)
        out = dict(self._lift(ctx))
        for e, c in other._lift(ctx).items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(ctx, out)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> 'MultiPoly':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'MultiPoly':
        return self._coerce(other) - self

    def __mul__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        ctx = self._context(other)
        left, right = self._lift(ctx), other._lift(ctx)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'MultiPoly':
        if k < 0:
            raise ValueError("Negatif üs")
        result, base = MultiPoly.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, k: Scalar) -> 'MultiPoly':
        k = to_rational(k)
        return MultiPoly(self._variables, {e: c * k for e, c in self._terms.items()})

    # -- analiz ----------------------------------------------------------
    def derivative(self, var: str) -> 'MultiPoly':
        variable_rank(var)
        if var not in self._variables:
            return MultiPoly.constant(0)
        i = self._variables.index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                reduced = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[reduced] = c * e[i]
        return MultiPoly(self._variables, out)

    def substitute(self, bindings: Mapping[str, Union[Scalar, 'MultiPoly']]) -> 'MultiPoly':
        """
        Değişkenleri rasyonel sayılarla veya polinomlarla değiştirir.

        Değerlendirme/yerine koyma homomorfizmasının görüntüsünü döndürür.
        Sayısal bağlamalar önce uygulanır, polinom bağlamaları sonra.

        Args:
            bindings: değişken adı -> Fraction/int veya MultiPoly

        Returns:
            MultiPoly: kanonik biçimde sonuç (tek değişken kalırsa as_univariate ile UniPoly alınır)
        """
        numeric = {v: to_rational(x) for v, x in bindings.items()
                   if not isinstance(x, (MultiPoly, UniPoly)) and v in self._variables}
        symbolic = {v: self._coerce(x) for v, x in bindings.items()
                    if isinstance(x, (MultiPoly, UniPoly)) and v in self._variables}
        result = self._evaluate(numeric) if numeric else self
        if symbolic:
            result = result._compose(symbolic)
        return result

    def _evaluate(self, values: Mapping[str, Fraction]) -> 'MultiPoly':
        bound = [(i, values[v]) for i, v in enumerate(self._variables) if v in values]
        keep = [i for i, v in enumerate(self._variables) if v not in values]
        rest = tuple(self._variables[i] for i in keep)
        out: Dict[Exponent, Fraction] = {}
        power_cache: Dict[Tuple[int, int], Fraction] = {}
        for e, c in self._terms.items():
            factor = c
            for i, x in bound:
                k = e[i]
                if k:
                    key = (i, k)
                    if key not in power_cache:
                        power_cache[key] = x ** k
                    factor *= power_cache[key]
            if factor:
                reduced = tuple(e[i] for i in keep)
                out[reduced] = out.get(reduced, Fraction(0)) + factor
        return MultiPoly(rest, out)

    def _compose(self, images: Mapping[str, 'MultiPoly']) -> 'MultiPoly':
        result = MultiPoly.constant(0)
        power_cache: Dict[Tuple[str, int], MultiPoly] = {}
        for e, c in self._terms.items():
            term = MultiPoly.constant(c)
            for v, k in zip(self._variables, e):
                if not k:
                    continue
                if v in images:
                    key = (v, k)
                    if key not in power_cache:
                        power_cache[key] = images[v] ** k
                    term = term * power_cache[key]
                else:
                    term = term * MultiPoly((v,), {(k,): 1})
            result = result + term
        return result

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Tüm değişkenler bağlandığında kesin değer."""
        reduced = self.substitute(point)
        return reduced.constant_value

    def sign_at(self, point: Mapping[str, Scalar]) -> int:
        value = self.evaluate(point)
        return (value > 0) - (value < 0)

    def as_univariate(self, variable: Optional[str] = None) -> UniPoly:
        if len(self._variables) > 1:
            raise ValueError(f"Tek değişkenli değil: {self._variables}")
        name = self._variables[0] if self._variables else (variable or 'x1')
        if variable is not None and self._variables and name != variable:
            raise ValueError(f"Beklenen değişken {variable}, bulunan {name}")
        if not self._variables:
            return UniPoly(name, (self.constant_value,))
        degree = self.degree(name)
        coeffs = [Fraction(0)] * (degree + 1)
        for (k,), c in self._terms.items():
            coeffs[k] = c
        return UniPoly(name, tuple(coeffs))

    # -- normalizasyon ---------------------------------------------------
    def primitive(self) -> 'MultiPoly':
        """Tamsayı katsayılı, içeriği 1, baş terim katsayısı pozitif (derece-leks sırada) hali."""
        if not self._terms:
            return self
        lcm = 1
        for c in self._terms.values():
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = {e: int(c * lcm) for e, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        sign = 1 if self.leading_term_coefficient > 0 else -1
        return MultiPoly(self._variables, {e: Fraction(sign * v // g) for e, v in ints.items()})

    def to_sympy(self, gens: Optional[Sequence[str]] = None, domain=QQ) -> Poly:
        names = tuple(gens) if gens is not None else self._variables
        if not names:
            names = ('a',)
        missing = set(self._variables) - set(names)
        if missing:
            raise ValueError(f"Eksik üreteçler: {sorted(missing)}")
        lifted = self._lift(tuple(names)) if tuple(names) != self._variables else self._terms
        data = {e: to_sympy_rational(c) for e, c in lifted.items()}
        symbols = [sympy.Symbol(n) for n in names]
        if not data:
            return Poly(0, *symbols, domain=domain)
        return Poly.from_dict(data, *symbols, domain=domain)

    def to_expr(self):
        symbols = [sympy.Symbol(n) for n in self._variables]
        expr = sympy.Integer(0)
        for e, c in self.sorted_terms():
            term = to_sympy_rational(c)
            for s, k in zip(symbols, e):
                if k:
                    term = term * s ** k
            expr = expr + term
        return expr

    # -- serileştirme ----------------------------------------------------
    def to_json(self) -> Dict[str, object]:
        return {
            'vars': list(self._variables),
            'terms': [{'exp': list(e), 'num': str(c.numerator), 'den': str(c.denominator)}
                      for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> 'MultiPoly':
        terms = {tuple(t['exp']): Fraction(int(t['num']), int(t['den'])) for t in data['terms']}
        return cls(tuple(data['vars']), terms)

    def canonical_key(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                return self == MultiPoly.constant(other)
            return NotImplemented
        return self._variables == other._variables and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._variables, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        return str(self.to_expr())


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    """add / sub / mul; değişken bağlamı otomatik birleştirilir."""
    if op == 'add':
        return p + q
    if op == 'sub':
        return p - q
    if op == 'mul':
        return p * q
    raise ValueError(f"Bilinmeyen işlem: {op}")


def gcd_and_squarefree(p: UniPoly) -> Tuple[List[Tuple[UniPoly, int]], UniPoly]:
    """
    Karesiz ayrıştırma.

    Args:
        p (UniPoly): sıfır olmayan polinom

    Returns:
        Tuple: ([(faktör, katlılık), ...], karesiz kısım). Faktörlerin katlılıklarıyla
        çarpımı p'ye bir rasyonel sabit farkıyla eşittir.

    Raises:
        ZeroPolynomialError: p sıfırsa
    """
    if p.is_zero:
        raise ZeroPolynomialError(constants.ERROR_ZERO_POLYNOMIAL.format(context='gcd_and_squarefree'))
    if p.degree == 0:
        return [], UniPoly(p.variable, (Fraction(1),))
    sp = p.to_sympy()
    _, factors = sp.sqf_list()
    stack = [(UniPoly.from_sympy(f, p.variable).primitive(), k) for f, k in factors]
    return stack, UniPoly.from_sympy(sp.sqf_part(), p.variable).primitive()


def squarefree_part(p: UniPoly) -> UniPoly:
    return gcd_and_squarefree(p)[1]


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    if p.is_zero:
        return q.primitive()
    if q.is_zero:
        return p.primitive()
    return UniPoly.from_sympy(p.to_sympy().gcd(q.to_sympy()), p.variable).primitive()


def uni_quotient(p: UniPoly, q: UniPoly) -> UniPoly:
    """Kesin bölüm p / q (q, p'yi bölmeli)."""
    return UniPoly.from_sympy(p.to_sympy().exquo(q.to_sympy()), p.variable)


def _common_gens(*polys: MultiPoly) -> Tuple[str, ...]:
    names: List[str] = []
    for p in polys:
        names.extend(p.variables)
    return _ordered(names) or ('a',)


def multi_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    gens = _common_gens(p, q)
    g = p.to_sympy(gens).gcd(q.to_sympy(gens))
    return MultiPoly.from_sympy(g).primitive()


def multi_quotient(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    gens = _common_gens(p, q)
    return MultiPoly.from_sympy(p.to_sympy(gens).exquo(q.to_sympy(gens)))


def divides(d: MultiPoly, p: MultiPoly) -> bool:
    """d | p tam bölünebilirliği (rasyoneller üzerinde)."""
    if d.is_zero:
        return p.is_zero
    gens = _common_gens(d, p)
    _, remainder = p.to_sympy(gens).div(d.to_sympy(gens))
    return remainder.is_zero


def _factor_pairs(p: MultiPoly, context: str, irreducible: bool) -> List[Tuple[MultiPoly, int]]:
    if p.is_zero:
        raise ZeroPolynomialError(constants.ERROR_ZERO_POLYNOMIAL.format(context=context))
    if p.is_constant:
        return []
    sp = p.to_sympy()
    _, factors = sp.factor_list() if irreducible else sp.sqf_list()
    out = []
    for f, k in factors:
        factor = MultiPoly.from_sympy(f).primitive()
        if not factor.is_constant:
            out.append((factor, k))
    return out


def multi_squarefree_factors(p: MultiPoly) -> List[Tuple[MultiPoly, int]]:
    """Çok değişkenli karesiz ayrıştırma; sabit faktörler atılır."""
    return _factor_pairs(p, 'multi_squarefree_factors', irreducible=False)


def multi_irreducible_factors(p: MultiPoly) -> List[Tuple[MultiPoly, int]]:
    """Q üzerinde indirgenemez çarpanlar ve katlılıkları; sabitler atılır."""
    return _factor_pairs(p, 'multi_irreducible_factors', irreducible=True)


def product(polys: Iterable[MultiPoly]) -> MultiPoly:
    result = MultiPoly.constant(1)
    for p in polys:
        result = result * p
    return result
