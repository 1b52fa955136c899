"""Deterministic random germs for the property and acceptance tests."""

import random
from fractions import Fraction

from nonarch import Germ

MAX_DEG = 8
MAX_COEFF = 1000


def rational(rng: random.Random, bound: int = MAX_COEFF) -> Fraction:
    if rng.random() < 0.7:
        return Fraction(rng.randint(-bound, bound))
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def poly(rng: random.Random, max_deg: int = MAX_DEG, nonzero: bool = False) -> list:
    deg = rng.randint(0, max_deg)
    coeffs = [rational(rng) for _ in range(deg + 1)]
    if nonzero and all(c == 0 for c in coeffs):
        coeffs[-1] = Fraction(1)
    # keep the stated degree most of the time
    if coeffs[-1] == 0 and rng.random() < 0.9:
        coeffs[-1] = Fraction(rng.choice([-1, 1]) * rng.randint(1, MAX_COEFF))
    return coeffs


def germ(rng: random.Random, max_deg: int = MAX_DEG) -> Germ:
    if rng.random() < 0.05:
        return Germ([rational(rng)])
    return Germ(poly(rng, max_deg), poly(rng, max_deg, nonzero=True))


def nonzero_germ(rng: random.Random, max_deg: int = MAX_DEG) -> Germ:
    while True:
        g = germ(rng, max_deg)
        if g:
            return g


def positive_germ(rng: random.Random, max_deg: int = MAX_DEG) -> Germ:
    g = nonzero_germ(rng, max_deg)
    return g if g.sign() > 0 else -g


def finite_germ(rng: random.Random, max_deg: int = MAX_DEG) -> Germ:
    """A germ with deg(num) <= deg(den)."""
    den = poly(rng, max_deg, nonzero=True)
    d = max(i for i, c in enumerate(den) if c != 0)
    num = poly(rng, d)
    return Germ(num, den)
