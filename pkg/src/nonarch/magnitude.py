"""Magnitude classes, standard parts, monads, galaxies and scaling cases."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, NonpositiveStep, NotFinite
from .germ import Germ, GermLike, _as_germ, omega


class Kind(enum.Enum):
    INFINITESIMAL = "infinitesimal"
    FINITE_APPRECIABLE = "finite"
    INFINITELY_LARGE = "infinite"


class Sign(enum.Enum):
    NEGATIVE = "neg"
    ZERO = "zero"
    POSITIVE = "pos"


@dataclass(frozen=True)
class Magnitude:
    kind: Kind
    sign: Sign

    @property
    def is_infinitesimal(self) -> bool:
        return self.kind is Kind.INFINITESIMAL

    @property
    def is_finite(self) -> bool:
        """Finite in the wide sense: infinitesimal or appreciable."""
        return self.kind is not Kind.INFINITELY_LARGE

    @property
    def is_infinitely_large(self) -> bool:
        return self.kind is Kind.INFINITELY_LARGE

    def __str__(self):
        return f"{self.kind.value},{self.sign.value}"


_SIGNS = {-1: Sign.NEGATIVE, 0: Sign.ZERO, 1: Sign.POSITIVE}


def classify(x: GermLike) -> Magnitude:
    x = _as_germ(x)
    d = x.degree
    if d < 0:
        kind = Kind.INFINITESIMAL
    elif d == 0:
        kind = Kind.FINITE_APPRECIABLE
    else:
        kind = Kind.INFINITELY_LARGE
    return Magnitude(kind, _SIGNS[x.sign()])


def is_infinitesimal(x: GermLike) -> bool:
    return _as_germ(x).degree < 0


def is_finite(x: GermLike) -> bool:
    return _as_germ(x).degree <= 0


def is_infinitely_large(x: GermLike) -> bool:
    return _as_germ(x).degree > 0


def standard_part(x: GermLike) -> Fraction:
    """The unique rational infinitely close to a finite germ."""
    x = _as_germ(x)
    d = x.degree
    if d > 0:
        raise NotFinite(f"{x} is infinitely large and has no standard part")
    if d < 0:
        return Fraction(0)
    return x.leading_ratio()


def in_monad(x: GermLike, t: GermLike) -> bool:
    return is_infinitesimal(_as_germ(x) - _as_germ(t))


def in_galaxy(x: GermLike, t: GermLike) -> bool:
    return is_finite(_as_germ(x) - _as_germ(t))


def inversion_map(t: GermLike, t0: GermLike = 0) -> Germ:
    """``t -> 1/t + t0``: sends infinitely large elements into monad(t0) minus t0."""
    t = _as_germ(t)
    if t.is_zero():
        raise DivisionByZero("inversion of zero")
    return t.reciprocal() + _as_germ(t0)


# -- scaling taxonomy --------------------------------------------------------


class GalaxyRelation(enum.Enum):
    SUBSET = "subset"
    CONTAINS_GAL_MINUS_POINT = "contains-Gal-minus-point"
    CONTAINS_GAL = "contains-Gal"
    DISJOINT = "disjoint"
    INTERSECTS_PARTIALLY = "intersects-partially"


@dataclass(frozen=True)
class ScalingCase:
    """Shape of the punctured interval ``[t0 - 1/u, t0 + 1/u] \\ {t0}``.

    ``case_id`` is fixed by the magnitudes of ``t0`` (rows) and ``u``
    (columns), each ordered appreciable, infinitesimal, infinitely large.
    A zero center sits in the appreciable row with the other standard
    numbers.  The other fields are computed from the interval itself.
    """

    case_id: int
    galaxy_relation: GalaxyRelation
    length: Kind
    in_monad_of_center: bool

    @property
    def outcome(self) -> tuple:
        return (self.galaxy_relation, self.length, self.in_monad_of_center)

    def to_dict(self) -> dict:
        return {
            "case": self.case_id,
            "gal0": self.galaxy_relation.value,
            "length": self.length.value,
            "in_monad": self.in_monad_of_center,
        }

    def __str__(self):
        return (
            f"case {self.case_id}: {self.galaxy_relation.value}, "
            f"length {self.length.value}, in-monad {str(self.in_monad_of_center).lower()}"
        )


_ROW = {Kind.FINITE_APPRECIABLE: 0, Kind.INFINITESIMAL: 1, Kind.INFINITELY_LARGE: 2}


def scaling_case(t0: GermLike, u: GermLike) -> ScalingCase:
    t0, u = _as_germ(t0), _as_germ(u)
    if u.sign() <= 0:
        raise NonpositiveStep(f"step {u} is not positive")
    row = _ROW[classify(t0).kind] if t0 else 0
    case_id = 3 * row + _ROW[classify(u).kind] + 1
    r = u.reciprocal()
    lo, hi = t0 - r, t0 + r
    lo_finite, hi_finite = is_finite(lo), is_finite(hi)
    if lo_finite and hi_finite:
        rel = GalaxyRelation.SUBSET
    elif (not lo_finite and lo.sign() > 0) or (not hi_finite and hi.sign() < 0):
        rel = GalaxyRelation.DISJOINT
    elif not lo_finite and not hi_finite:
        # lo < Gal(0) < hi; only t0 itself is removed
        rel = GalaxyRelation.CONTAINS_GAL_MINUS_POINT if is_finite(t0) else GalaxyRelation.CONTAINS_GAL
    else:
        rel = GalaxyRelation.INTERSECTS_PARTIALLY
    length = classify(2 * r).kind
    return ScalingCase(case_id, rel, length, is_infinitesimal(r))


def archimedean_witness(u: GermLike) -> Germ:
    """An element exceeding every natural multiple of ``u > 0``, namely ``u*w``."""
    u = _as_germ(u)
    if u.sign() <= 0:
        raise NonpositiveStep(f"step {u} is not positive")
    return u * omega()


def witness_certificate(u: GermLike, x: GermLike, n: int) -> bool:
    """Symbolic check that ``x/u - n`` is positive, i.e. ``n*u < x``."""
    return (_as_germ(x) / _as_germ(u) - n).sign() > 0
