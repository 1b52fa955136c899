"""The ordered field Q(w) of rational-function germs.

A germ is the class of the sequence ``n -> num(n)/den(n)`` modulo eventual
agreement.  Two rational functions agree on a cofinite set of indices only
when they are identical, so the reduced fraction is a complete invariant and
the eventual sign of the leading coefficient decides the order.

Internally a germ is a pair ``(N, D)`` of integer polynomials with

* ``gcd(N, D) = 1`` over Q,
* ``lc(D) > 0``,
* the gcd of all coefficients of ``N`` and ``D`` together equal to 1.

That pair is unique for each field element, so structural equality is field
equality.  The monic-denominator view required by the public API is derived
on demand (``num``/``den``).
"""

from __future__ import annotations

import enum
import math
import os
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import DegreeLimit, DivisionByZero, ZeroGerm
from .poly import (
    GermPolynomial,
    format_poly,
    from_fractions,
    ip_add,
    ip_degree,
    ip_eval,
    ip_exact_div,
    ip_gcd,
    ip_mul,
    ip_neg,
    ip_sub,
)

DEFAULT_MAX_DEGREE = 64

_max_degree_override: int | None = None


def max_degree() -> int:
    """Largest polynomial degree a germ may carry (``NONARCH_MAX_DEGREE``)."""
    if _max_degree_override is not None:
        return _max_degree_override
    raw = os.environ.get("NONARCH_MAX_DEGREE")
    if not raw:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_DEGREE


def set_max_degree(limit: int | None) -> None:
    """Override the degree cap for this process; ``None`` restores the env default."""
    global _max_degree_override
    _max_degree_override = limit


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _div_exact(f, g):
    q = ip_exact_div(f, g)
    if q is None:  # pragma: no cover - a reduced gcd always divides
        raise ArithmeticError("inexact polynomial division")
    return q


def _normalize_content(n, d):
    c = math.gcd(*n, *d)
    if d[-1] < 0:
        c = -c
    if c != 1:
        n = tuple(a // c for a in n)
        d = tuple(a // c for a in d)
    return n, d


def _check_degree(n, d):
    limit = max_degree()
    if len(n) - 1 > limit or len(d) - 1 > limit:
        raise DegreeLimit(
            f"germ degree {max(len(n), len(d)) - 1} exceeds NONARCH_MAX_DEGREE={limit}"
        )


GermLike = Union["Germ", int, Fraction]


class Germ:
    """An element of the non-Archimedean field Q(w).

    Supports the usual arithmetic and comparison operators, mixing freely
    with ``int`` and ``Fraction``.

    >>> w = omega()
    >>> (w + 1) * (w - 1)
    Germ('w^2 - 1')
    >>> epsilon() < Fraction(1, 10**9)
    True
    """

    __slots__ = ("_n", "_d")

    def __init__(self, num=(), den=(1,)):
        """Build from rational coefficient sequences (ascending powers) or polynomials."""
        if isinstance(num, GermPolynomial):
            num = num.coefficients
        if isinstance(den, GermPolynomial):
            den = den.coefficients
        n, mn = from_fractions(num)
        d, md = from_fractions(den)
        if not d:
            raise DivisionByZero("germ with zero denominator")
        # num/den = (n/mn)/(d/md) = (n*md)/(d*mn)
        n = tuple(a * md for a in n)
        d = tuple(a * mn for a in d)
        g = ip_gcd(n, d)
        if g != (1,):
            n, d = _div_exact(n, g), _div_exact(d, g)
        self._n, self._d = _raw_parts(n, d)

    @classmethod
    def _from_int_parts(cls, n, d) -> "Germ":
        """Trusted constructor: ``gcd(n, d) = 1`` already holds."""
        if not n:
            return _ZERO
        n, d = _normalize_content(n, d)
        _check_degree(n, d)
        obj = object.__new__(cls)
        obj._n, obj._d = n, d
        return obj

    @classmethod
    def parse(cls, text: str) -> "Germ":
        """Parse the canonical text form, e.g. ``(2*w^2 + 1/3) / (w + 5)``."""
        from .evaluate import evaluate_text

        value = evaluate_text(text)
        if isinstance(value, Fraction):
            return embed_rational(value)
        if not isinstance(value, Germ):
            raise TypeError(f"not a germ expression: {text!r}")
        return value

    # -- views -------------------------------------------------------------

    @property
    def num(self) -> GermPolynomial:
        lc = self._d[-1]
        return GermPolynomial(Fraction(a, lc) for a in self._n)

    @property
    def den(self) -> GermPolynomial:
        lc = self._d[-1]
        return GermPolynomial(Fraction(a, lc) for a in self._d)

    @property
    def num_degree(self) -> float:
        return ip_degree(self._n)

    @property
    def den_degree(self) -> int:
        return len(self._d) - 1

    @property
    def degree(self) -> float:
        """Order of growth: ``deg(num) - deg(den)``; ``-inf`` for zero."""
        return ip_degree(self._n) - (len(self._d) - 1)

    def sign(self) -> int:
        if not self._n:
            return 0
        return 1 if self._n[-1] > 0 else -1

    def is_zero(self) -> bool:
        return not self._n

    def is_constant(self) -> bool:
        return len(self._n) <= 1 and len(self._d) == 1

    def leading_ratio(self) -> Fraction:
        """Ratio of the leading coefficients of numerator and denominator."""
        if not self._n:
            return Fraction(0)
        return Fraction(self._n[-1], self._d[-1])

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"germ {self} is not a constant")
        return Fraction(self._n[0], self._d[0]) if self._n else Fraction(0)

    def at(self, n) -> Fraction:
        """Value of the representing sequence at index ``n``."""
        d = ip_eval(self._d, n) if isinstance(n, int) else _q_eval(self._d, n)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at index {n}")
        v = ip_eval(self._n, n) if isinstance(n, int) else _q_eval(self._n, n)
        return Fraction(v) / d

    def sign_at(self, n: int) -> int:
        """Sign of the representing sequence at the integer index ``n``."""
        d = ip_eval(self._d, n)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at index {n}")
        v = ip_eval(self._n, n)
        return (v > 0) - (v < 0) if d > 0 else (v < 0) - (v > 0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _mul(self, other.reciprocal())

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _mul(other, self.reciprocal())

    def __neg__(self):
        obj = object.__new__(Germ)
        obj._n, obj._d = ip_neg(self._n), self._d
        return obj

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def reciprocal(self) -> "Germ":
        if not self._n:
            raise DivisionByZero("division by the zero germ")
        return Germ._from_int_parts(self._d, self._n)

    def __pow__(self, k):
        if isinstance(k, Germ) and k.is_constant():
            k = k.to_fraction()
        if isinstance(k, Fraction) and k.denominator == 1:
            k = k.numerator
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        if k == 0:
            return _ONE
        limit = max_degree()
        top = max(len(self._n), len(self._d)) - 1
        if top * k > limit:
            raise DegreeLimit(f"power of degree {top * k} exceeds NONARCH_MAX_DEGREE={limit}")
        if top == 0 and k > 4096:
            raise DegreeLimit(f"constant exponent {k} is too large")
        n, d = (1,), (1,)
        bn, bd = self._n, self._d
        while k:
            if k & 1:
                n, d = ip_mul(n, bn), ip_mul(d, bd)
            k >>= 1
            if k:
                bn, bd = ip_mul(bn, bn), ip_mul(bd, bd)
        # coprime bases give coprime powers
        return Germ._from_int_parts(n, d)

    # -- order -------------------------------------------------------------

    def _cmp(self, other) -> int:
        return _compare_parts(self._n, self._d, other._n, other._d)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        if self.is_constant():
            return hash(self.to_fraction())
        return hash((self._n, self._d))

    def __lt__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) < 0

    def __le__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) >= 0

    def __bool__(self):
        return bool(self._n)

    # -- text --------------------------------------------------------------

    def __str__(self):
        lc = self._d[-1]
        num = [Fraction(a, lc) for a in self._n]
        if len(self._d) == 1:
            return format_poly(num)
        den = [Fraction(a, lc) for a in self._d]
        ns = format_poly(num)
        ds = format_poly(den)
        if sum(1 for a in self._n if a) > 1:
            ns = f"({ns})"
        if sum(1 for a in self._d if a) > 1:
            ds = f"({ds})"
        return f"{ns} / {ds}"

    def __repr__(self):
        return f"Germ({str(self)!r})"


def _q_eval(f, x):
    acc = Fraction(0)
    for a in reversed(f):
        acc = acc * x + a
    return acc


def _raw_parts(n, d):
    if not n:
        return (), (1,)
    n, d = _normalize_content(n, d)
    _check_degree(n, d)
    return n, d


def _coerce(x):
    if isinstance(x, Germ):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, (int, Rational)):
        return embed_rational(x)
    return NotImplemented


def _add(a: Germ, b: Germ) -> Germ:
    if not a._n:
        return b
    if not b._n:
        return a
    an, ad, bn, bd = a._n, a._d, b._n, b._d
    if len(ad) == 1 and len(bd) == 1:
        return Germ._from_int_parts(ip_add(ip_mul(an, bd), ip_mul(bn, ad)), ip_mul(ad, bd))
    g = ip_gcd(ad, bd)
    if g == (1,):
        num = ip_add(ip_mul(an, bd), ip_mul(bn, ad))
        if not num:
            return _ZERO
        return Germ._from_int_parts(num, ip_mul(ad, bd))
    ad_g = _div_exact(ad, g)
    bd_g = _div_exact(bd, g)
    t = ip_add(ip_mul(an, bd_g), ip_mul(bn, ad_g))
    if not t:
        return _ZERO
    g2 = ip_gcd(t, g)
    if g2 != (1,):
        t = _div_exact(t, g2)
        bd = _div_exact(bd, g2)
    return Germ._from_int_parts(t, ip_mul(ad_g, bd))


def _mul(a: Germ, b: Germ) -> Germ:
    if not a._n or not b._n:
        return _ZERO
    an, ad, bn, bd = a._n, a._d, b._n, b._d
    g1 = ip_gcd(an, bd)
    g2 = ip_gcd(bn, ad)
    if g1 != (1,):
        an, bd = _div_exact(an, g1), _div_exact(bd, g1)
    if g2 != (1,):
        bn, ad = _div_exact(bn, g2), _div_exact(ad, g2)
    return Germ._from_int_parts(ip_mul(an, bn), ip_mul(ad, bd))


def _compare_parts(an, ad, bn, bd) -> int:
    # sign(a - b) = sign(lc(an*bd - bn*ad)) because both denominators have lc > 0
    if an == bn and ad == bd:
        return 0
    if not an:
        return -1 if bn[-1] > 0 else 1
    if not bn:
        return 1 if an[-1] > 0 else -1
    left = len(an) + len(bd)
    right = len(bn) + len(ad)
    if left > right:
        return 1 if an[-1] > 0 else -1
    if left < right:
        return -1 if bn[-1] > 0 else 1
    diff = ip_sub(ip_mul(an, bd), ip_mul(bn, ad))
    if not diff:
        return 0
    return 1 if diff[-1] > 0 else -1


# -- module-level API ------------------------------------------------------


def embed_rational(r) -> Germ:
    """The constant germ ``r``; an injective ring homomorphism Q -> Q(w)."""
    r = Fraction(r)
    if r == 0:
        return _ZERO
    obj = object.__new__(Germ)
    obj._n, obj._d = (r.numerator,), (r.denominator,)
    return obj


def omega() -> Germ:
    """The infinitely large generator, the class of the identity sequence."""
    return _OMEGA


def epsilon() -> Germ:
    """The positive infinitesimal ``1/w``."""
    return _EPSILON


def add(a: GermLike, b: GermLike) -> Germ:
    return _add(_as_germ(a), _as_germ(b))


def sub(a: GermLike, b: GermLike) -> Germ:
    return _add(_as_germ(a), -_as_germ(b))


def mul(a: GermLike, b: GermLike) -> Germ:
    return _mul(_as_germ(a), _as_germ(b))


def neg(a: GermLike) -> Germ:
    return -_as_germ(a)


def div(a: GermLike, b: GermLike) -> Germ:
    """Exact quotient; raises ``DivisionByZero`` when ``b`` is zero."""
    return _mul(_as_germ(a), _as_germ(b).reciprocal())


def compare(a: GermLike, b: GermLike) -> Ordering:
    a, b = _as_germ(a), _as_germ(b)
    return Ordering(a._cmp(b))


def _cauchy_bound(f) -> int:
    # every real root x satisfies |x| < 1 + max |a_i / a_n|
    if len(f) <= 1:
        return 0
    lead = abs(f[-1])
    ratio = max(Fraction(abs(a), lead) for a in f[:-1])
    return math.ceil(1 + ratio)


def eventual_sign_bound(a: GermLike) -> int:
    """Index ``N`` beyond which the representing sequence has the germ's sign.

    For every integer ``n >= N`` the denominator is nonzero and
    ``sign(num(n)/den(n)) == a.sign()``.  Raises ``ZeroGerm`` for zero.
    """
    a = _as_germ(a)
    if a.is_zero():
        raise ZeroGerm("the zero germ has no eventual sign")
    return max(_cauchy_bound(a._n), _cauchy_bound(a._d))


def _as_germ(x) -> Germ:
    g = _coerce(x)
    if g is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a germ")
    return g


_ZERO = object.__new__(Germ)
_ZERO._n, _ZERO._d = (), (1,)
_ONE = object.__new__(Germ)
_ONE._n, _ONE._d = (1,), (1,)
_OMEGA = object.__new__(Germ)
_OMEGA._n, _OMEGA._d = (0, 1), (1,)
_EPSILON = object.__new__(Germ)
_EPSILON._n, _EPSILON._d = (1,), (0, 1)
