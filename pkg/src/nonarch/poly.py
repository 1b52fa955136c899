"""Univariate polynomials in the generator ``w``.

Two layers live here.  The private ``ip_*`` helpers work on tuples of Python
ints in ascending-power order and do the heavy lifting for germ arithmetic;
keeping coefficients integral avoids the cost of ``Fraction`` normalisation
in inner loops.  ``GermPolynomial`` is the public value type with exact
rational coefficients.

The zero polynomial is the empty tuple and has degree ``-inf``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

NEG_INF = -math.inf

IntPoly = tuple  # tuple[int, ...], ascending powers, no trailing zeros


# -- integer polynomials ---------------------------------------------------


def ip_trim(c: Sequence[int]) -> IntPoly:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def ip_degree(f: IntPoly) -> float:
    return len(f) - 1 if f else NEG_INF


def ip_add(f: IntPoly, g: IntPoly) -> IntPoly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, b in enumerate(g):
        out[i] += b
    return ip_trim(out)


def ip_neg(f: IntPoly) -> IntPoly:
    return tuple(-a for a in f)


def ip_sub(f: IntPoly, g: IntPoly) -> IntPoly:
    out = list(f) + [0] * (len(g) - len(f))
    for i, b in enumerate(g):
        out[i] -= b
    return ip_trim(out)


def ip_mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if not f or not g:
        return ()
    if len(f) == 1:
        a = f[0]
        return tuple(a * b for b in g)
    if len(g) == 1:
        b = g[0]
        return tuple(a * b for a in f)
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return tuple(out)


def ip_scale(f: IntPoly, k: int) -> IntPoly:
    if k == 0:
        return ()
    return tuple(a * k for a in f)


def ip_exquo_scalar(f: IntPoly, k: int) -> IntPoly:
    return tuple(a // k for a in f)


def ip_content(f: IntPoly) -> int:
    return math.gcd(*f) if f else 0


def ip_primitive(f: IntPoly) -> IntPoly:
    """Primitive part with positive leading coefficient."""
    if not f:
        return f
    c = ip_content(f)
    if f[-1] < 0:
        c = -c
    return f if c == 1 else tuple(a // c for a in f)


def ip_eval(f: IntPoly, x: int) -> int:
    acc = 0
    for a in reversed(f):
        acc = acc * x + a
    return acc


def ip_exact_div(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """Quotient ``f / g`` in Z[w] when the division is exact, else ``None``."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return ()
    dg = len(g) - 1
    df = len(f) - 1
    if df < dg:
        return None
    if dg == 0:
        c = g[0]
        if any(a % c for a in f):
            return None
        return tuple(a // c for a in f)
    r = list(f)
    lc = g[-1]
    q = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        top = r[k + dg]
        if top:
            if top % lc:
                return None
            t = top // lc
            q[k] = t
            for j in range(dg + 1):
                r[k + j] -= t * g[j]
    if any(r[:dg]):
        return None
    return tuple(q)


def _interpolate(h: int, x: int) -> IntPoly:
    # symmetric-range base-x digits of h
    out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return ip_trim(out)


def _heuristic_gcd(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """GCDHEU on primitive inputs; ``None`` when all evaluation points fail."""
    fnorm = max(abs(a) for a in f)
    gnorm = max(abs(a) for a in g)
    # x above 1 + 2*min norm makes a divisor found this way the true gcd
    x = max(2 * min(fnorm, gnorm) + 29, 2 * min(fnorm // abs(f[-1]), gnorm // abs(g[-1])) + 2)
    for _ in range(6):
        fx = ip_eval(f, x)
        gx = ip_eval(g, x)
        if fx and gx:
            hx = math.gcd(fx, gx)
            h = ip_primitive(_interpolate(hx, x))
            if h and ip_exact_div(f, h) is not None and ip_exact_div(g, h) is not None:
                return h
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    return None


def ip_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[w] with positive leading coefficient.

    gcd(0, 0) is defined as 1 so callers can divide by it unconditionally.
    """
    if not f:
        return ip_primitive(g) if g else (1,)
    if not g:
        return ip_primitive(f)
    if len(f) == 1 or len(g) == 1:
        return (1,)
    f = ip_primitive(f)
    g = ip_primitive(g)
    if f == g:
        return f
    h = _heuristic_gcd(f, g)
    if h is None:
        h = q_gcd(to_fractions(f), to_fractions(g))
        h = ip_primitive(from_fractions(h)[0])
    return h


# -- rational polynomials ----------------------------------------------------


def q_trim(c: Sequence[Fraction]) -> tuple:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def q_divmod(f: Sequence[Fraction], g: Sequence[Fraction]) -> tuple[tuple, tuple]:
    """Long division over Q."""
    g = q_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(q_trim(f))
    dg = len(g) - 1
    lc = g[-1]
    if len(r) - 1 < dg:
        return (), tuple(r)
    q = [Fraction(0)] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        t = r[k + dg] / lc
        q[k] = t
        if t:
            for j in range(dg + 1):
                r[k + j] -= t * g[j]
    return q_trim(q), q_trim(r[:dg])


def q_gcd(f: Sequence[Fraction], g: Sequence[Fraction]) -> tuple:
    """Monic gcd over Q by the plain Euclidean algorithm."""
    a, b = q_trim(f), q_trim(g)
    while b:
        a, b = b, q_divmod(a, b)[1]
    if not a:
        return (Fraction(1),)
    lc = a[-1]
    return tuple(c / lc for c in a)


def to_fractions(f: IntPoly) -> tuple:
    return tuple(Fraction(a) for a in f)


def from_fractions(c: Iterable) -> tuple[IntPoly, int]:
    """Clear denominators: returns ``(p, m)`` with ``p / m`` equal to the input."""
    fr = [Fraction(x) for x in c]
    m = math.lcm(*(x.denominator for x in fr)) if fr else 1
    return ip_trim([x.numerator * (m // x.denominator) for x in fr]), m


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class GermPolynomial:
    """Immutable polynomial in ``w`` with exact rational coefficients.

    >>> p = GermPolynomial([1, 0, 2])
    >>> str(p), p.degree
    ('2*w^2 + 1', 2)
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        object.__setattr__(self, "coefficients", q_trim([Fraction(c) for c in coefficients]))

    def __setattr__(self, key, value):
        raise AttributeError("GermPolynomial is immutable")

    @property
    def degree(self) -> float:
        return len(self.coefficients) - 1 if self.coefficients else NEG_INF

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, GermPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other: "GermPolynomial") -> "GermPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return GermPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "GermPolynomial":
        return GermPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "GermPolynomial") -> "GermPolynomial":
        return self + (-other)

    def __mul__(self, other: "GermPolynomial") -> "GermPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return GermPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return GermPolynomial(out)

    def __divmod__(self, other: "GermPolynomial"):
        q, r = q_divmod(self.coefficients, other.coefficients)
        return GermPolynomial(q), GermPolynomial(r)

    def gcd(self, other: "GermPolynomial") -> "GermPolynomial":
        return GermPolynomial(q_gcd(self.coefficients, other.coefficients))

    def __repr__(self):
        return f"GermPolynomial({str(self)!r})"

    def __str__(self):
        return format_poly(self.coefficients)


def format_poly(coeffs: Sequence[Fraction]) -> str:
    """Text form in descending powers, e.g. ``2*w^2 - 1/3*w + 5``."""
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = _fmt_rational(a)
        else:
            mono = "w" if k == 1 else f"w^{k}"
            body = mono if a == 1 else f"{_fmt_rational(a)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)
