"""Filters, ideals and reduced powers over a finite index set.

Subsets of the index set ``{0, ..., k-1}`` are bitmasks.  Vectors of the
power algebra ``Q^k`` are tuples of ``Fraction``.  Every structural claim
(filter axioms, ideal membership, field-ness, order) is re-checked on
explicit vectors instead of being read off the representation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import UniverseTooLarge

MAX_UNIVERSE = 6
MAX_EXHAUSTIVE = 4

Vector = tuple


def _check_size(k: int) -> None:
    if k > MAX_UNIVERSE:
        raise UniverseTooLarge(f"universe size {k} exceeds {MAX_UNIVERSE}")
    if k < 1:
        raise ValueError(f"universe size must be at least 1, got {k}")


@dataclass(frozen=True)
class FiniteUniverse:
    size: int

    def __post_init__(self):
        _check_size(self.size)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def subsets(self) -> range:
        return range(1 << self.size)

    def elements(self, mask: int) -> list[int]:
        return [i for i in range(self.size) if mask >> i & 1]


def mask_elements(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def zero_set(x: Sequence) -> int:
    """``Z(x)``: mask of the coordinates where ``x`` vanishes."""
    m = 0
    for i, v in enumerate(x):
        if v == 0:
            m |= 1 << i
    return m


def constant_vector(k: int, r) -> Vector:
    return (Fraction(r),) * k


def indicator(k: int, mask: int) -> Vector:
    return tuple(Fraction(mask >> i & 1) for i in range(k))


def vectors(k: int, values: Iterable = (0, 1)) -> list[Vector]:
    vals = [Fraction(v) for v in values]
    return list(itertools.product(vals, repeat=k))


def satisfies_filter_axioms(k: int, family: Iterable[int]) -> bool:
    """Nonempty, excludes the empty set, closed under meets and supersets."""
    fam = set(family)
    full = (1 << k) - 1
    if not fam or 0 in fam:
        return False
    for a in fam:
        for b in fam:
            if a & b not in fam:
                return False
        # supersets of a are a | s for s ranging over subsets of the complement
        rest = full & ~a
        s = rest
        while True:
            if a | s not in fam:
                return False
            if s == 0:
                break
            s = (s - 1) & rest
    return True


@dataclass(frozen=True)
class FiniteFilter:
    size: int
    family: frozenset

    def __post_init__(self):
        _check_size(self.size)
        object.__setattr__(self, "family", frozenset(self.family))

    @classmethod
    def principal(cls, k: int, generator: int) -> "FiniteFilter":
        """``F_T = {J : J contains T}`` for nonempty ``T``."""
        if generator == 0:
            raise ValueError("the principal filter of the empty set is not proper")
        full = (1 << k) - 1
        return cls(k, frozenset(m for m in range(full + 1) if m & generator == generator))

    @classmethod
    def fixed_ultrafilter(cls, k: int, index: int) -> "FiniteFilter":
        return cls.principal(k, 1 << index)

    def __contains__(self, mask: int) -> bool:
        return mask in self.family

    @property
    def generator(self) -> int:
        """Intersection of all members; on a finite set this generates the filter."""
        return reduce(lambda a, b: a & b, self.family, (1 << self.size) - 1)

    def is_principal(self) -> bool:
        return self == FiniteFilter.principal(self.size, self.generator) if self.generator else False

    def sorted_family(self) -> list[list[int]]:
        return [mask_elements(m) for m in sorted(self.family, key=lambda m: (bin(m).count("1"), m))]


def enumerate_filters(k: int) -> list[FiniteFilter]:
    """All filters on a k-point set.

    For ``k <= 4`` every family of nonempty subsets (``2^(2^k - 1)`` of them)
    is tested against the axioms.  For ``k = 5, 6`` the principal filters are
    built directly.
    """
    _check_size(k)
    n_sub = 1 << k
    if k <= MAX_EXHAUSTIVE:
        found = []
        nonempty = list(range(1, n_sub))
        for bits in range(1 << (n_sub - 1)):
            family = [nonempty[j] for j in range(n_sub - 1) if bits >> j & 1]
            if satisfies_filter_axioms(k, family):
                found.append(FiniteFilter(k, frozenset(family)))
    else:
        found = [FiniteFilter.principal(k, t) for t in range(1, n_sub)]
    found.sort(key=lambda f: f.generator)
    return found


def candidate_count(k: int) -> int:
    return 1 << ((1 << k) - 1)


def is_ultrafilter(f: FiniteFilter) -> bool:
    full = (1 << f.size) - 1
    return all(i in f.family or (full & ~i) in f.family for i in range(full + 1))


def frechet_family(k: int) -> frozenset:
    """Cofinite subsets; on a finite set every subset, the empty one included."""
    return frozenset(range(1 << k))


def satisfies_frechet_condition(f: FiniteFilter) -> bool:
    return frechet_family(f.size) <= f.family


# -- ideals ----------------------------------------------------------------


@dataclass(frozen=True)
class FiniteIdeal:
    """``I_T = {x : x vanishes on T}`` in the power algebra ``Q^k``."""

    size: int
    co_support: int

    def __post_init__(self):
        _check_size(self.size)
        if self.co_support == 0:
            raise ValueError("empty co-support gives the improper ideal")

    def __contains__(self, x: Sequence) -> bool:
        return zero_set(x) & self.co_support == self.co_support

    def is_proper(self) -> bool:
        return constant_vector(self.size, 1) not in self


def filter_ideal_contains(f: FiniteFilter, x: Sequence) -> bool:
    """Membership in ``I_F = {x : Z(x) in F}``."""
    return zero_set(x) in f.family


def filter_to_ideal(f: FiniteFilter) -> FiniteIdeal:
    k = f.size
    full = (1 << k) - 1
    t = full
    # indicator of S vanishes exactly on the complement of S
    for s in range(full + 1):
        x = indicator(k, s)
        if filter_ideal_contains(f, x):
            t &= zero_set(x)
    return FiniteIdeal(k, t)


def ideal_to_filter(i: FiniteIdeal) -> FiniteFilter:
    k = i.size
    family = {zero_set(x) for x in vectors(k) if x in i}
    return FiniteFilter(k, frozenset(family))


def ideal_contained_in(a: FiniteIdeal, b: FiniteIdeal) -> bool:
    """``a <= b`` tested on 0/1 vectors, which separate ideals of ``Q^k``."""
    return all(x in b for x in vectors(a.size) if x in a)


def is_maximal(i: FiniteIdeal) -> bool:
    k = i.size
    for s in range(1, 1 << k):
        other = FiniteIdeal(k, s)
        if ideal_contained_in(i, other) and not ideal_contained_in(other, i):
            return False
    return True


# -- reduced power ---------------------------------------------------------


class QuotientElement:
    """Class of a vector modulo ``I_F``; canonical representative is zero off the generator."""

    __slots__ = ("filter", "rep")

    def __init__(self, f: FiniteFilter, x: Sequence):
        if len(x) != f.size:
            raise ValueError("vector length does not match the universe")
        g = f.generator
        self.filter = f
        self.rep = tuple(Fraction(v) if g >> i & 1 else Fraction(0) for i, v in enumerate(x))

    def _wrap(self, rep):
        return QuotientElement(self.filter, rep)

    def __add__(self, other):
        return self._wrap(tuple(a + b for a, b in zip(self.rep, other.rep)))

    def __sub__(self, other):
        return self._wrap(tuple(a - b for a, b in zip(self.rep, other.rep)))

    def __mul__(self, other):
        return self._wrap(tuple(a * b for a, b in zip(self.rep, other.rep)))

    def __neg__(self):
        return self._wrap(tuple(-a for a in self.rep))

    def __eq__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return filter_ideal_contains(self.filter, tuple(a - b for a, b in zip(self.rep, other.rep)))

    def __hash__(self):
        return hash(self.rep)

    def __le__(self, other):
        s = 0
        for i, (a, b) in enumerate(zip(self.rep, other.rep)):
            if a <= b:
                s |= 1 << i
        return s in self.filter.family

    def __ge__(self, other):
        return other <= self

    def is_zero(self) -> bool:
        return filter_ideal_contains(self.filter, self.rep)

    def inverse(self) -> "QuotientElement | None":
        y = tuple(1 / a if a else Fraction(0) for a in self.rep)
        inv = self._wrap(y)
        one = self._wrap(constant_vector(self.filter.size, 1))
        return inv if self * inv == one else None

    def __repr__(self):
        return f"QuotientElement({[str(a) for a in self.rep]})"


def embed_scalar(f: FiniteFilter, r) -> QuotientElement:
    return QuotientElement(f, constant_vector(f.size, r))


@dataclass(frozen=True)
class QuotientAlgebra:
    dimension: int
    is_field: bool
    order: str  # "total" or "partial"
    incomparable: tuple | None = None
    collapses_to_scalars: bool = False

    def to_dict(self) -> dict:
        d = {"dim": self.dimension, "field": self.is_field, "order": self.order}
        if self.incomparable is not None:
            d["incomparable"] = [[str(v) for v in x] for x in self.incomparable]
        return d


def _sample_vectors(k: int) -> list[Vector]:
    if k <= 3:
        return vectors(k, (0, 1, 2))
    basis = [indicator(k, 1 << i) for i in range(k)]
    extras = [constant_vector(k, 0), constant_vector(k, 1), indicator(k, 0b0101 & ((1 << k) - 1))]
    return basis + extras


def quotient(f: FiniteFilter) -> QuotientAlgebra:
    k = f.size
    basis = [QuotientElement(f, indicator(k, 1 << i)) for i in range(k)]
    dim = sum(1 for e in basis if not e.is_zero())
    sample = [QuotientElement(f, x) for x in _sample_vectors(k)]
    is_field = all(x.is_zero() or x.inverse() is not None for x in sample)
    incomparable = None
    for x, y in itertools.combinations(sample, 2):
        if not (x <= y or y <= x):
            incomparable = (x.rep, y.rep)
            break
    collapses = False
    if dim == 1:
        t = mask_elements(f.generator)[0]
        # class -> value at the generator point is a ring isomorphism onto Q
        collapses = all(QuotientElement(f, constant_vector(k, x.rep[t])) == x for x in sample)
    return QuotientAlgebra(
        dimension=dim,
        is_field=is_field,
        order="total" if incomparable is None else "partial",
        incomparable=incomparable,
        collapses_to_scalars=collapses,
    )


@dataclass
class OrderReport:
    total: bool = True
    violations: list = field(default_factory=list)
    incomparable: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "total": self.total,
            "violations": list(self.violations),
            "incomparable": [[[str(v) for v in x], [str(v) for v in y]] for x, y in self.incomparable],
        }


def quotient_order_check(f: FiniteFilter, sample: Iterable[Sequence]) -> OrderReport:
    """Check the order axioms and their compatibility with + and * on a sample."""
    xs = [QuotientElement(f, x) for x in sample]
    rep = OrderReport()
    zero = embed_scalar(f, 0)
    for a in xs:
        if not a <= a:
            rep.violations.append(f"reflexivity fails at {a.rep}")
    for a, b in itertools.product(xs, repeat=2):
        ab, ba = a <= b, b <= a
        if not (ab or ba):
            rep.total = False
            if (b.rep, a.rep) not in rep.incomparable:
                rep.incomparable.append((a.rep, b.rep))
        if ab and ba and not a == b:
            rep.violations.append(f"antisymmetry fails at {a.rep}, {b.rep}")
    for a, b, c in itertools.product(xs, repeat=3):
        if a <= b:
            if b <= c and not a <= c:
                rep.violations.append(f"transitivity fails at {a.rep}, {b.rep}, {c.rep}")
            if not a + c <= b + c:
                rep.violations.append(f"translation invariance fails at {a.rep}, {b.rep}, {c.rep}")
            if zero <= c and not c * a <= c * b:
                rep.violations.append(f"monotonicity fails at {a.rep}, {b.rep}, {c.rep}")
    return rep


def embedding_injectivity_check(f: FiniteFilter, scalars: Iterable = (0, 1, -1, 2, 3, 5, Fraction(1, 2), Fraction(-7, 3))) -> bool:
    """``r -> u_r + I_F`` is an injective ring homomorphism on the sampled scalars."""
    rs = [Fraction(r) for r in scalars]
    k = f.size
    for r in rs:
        if filter_ideal_contains(f, constant_vector(k, r)) != (r == 0):
            return False
    for r, s in itertools.product(rs, repeat=2):
        a, b = embed_scalar(f, r), embed_scalar(f, s)
        if not (a + b == embed_scalar(f, r + s) and a * b == embed_scalar(f, r * s)):
            return False
        if (a <= b) != (r <= s):
            return False
    return True


def membership_law_holds(f: FiniteFilter, ideal: FiniteIdeal, sample: Iterable[Sequence]) -> bool:
    """``x in I_F  <=>  Z(x) in F`` on every sampled vector."""
    return all((x in ideal) == (zero_set(x) in f.family) for x in sample)


def lab_report(k: int) -> dict:
    """Everything the ``filters`` command prints, as a JSON-ready dict."""
    _check_size(k)
    filters = enumerate_filters(k)
    exhaustive = k <= MAX_EXHAUSTIVE
    member_sample = vectors(k, (0, 1, -2)) if k <= 4 else vectors(k, (0, 1))
    order_sample = _sample_vectors(k) if k <= 2 else [
        indicator(k, 1 << i) for i in range(min(k, 3))
    ] + [constant_vector(k, 0), constant_vector(k, 1), constant_vector(k, -1)]
    checks = {
        "axioms": True,
        "all_principal": True,
        "round_trip": True,
        "membership_law": True,
        "ultrafilter_field_maximal": True,
        "dimension_law": True,
        "collapse_to_scalars": True,
        "frechet_condition_unsatisfied": True,
        "embedding_injective": True,
        "order_compatible": True,
    }
    entries = []
    for f in filters:
        ideal = filter_to_ideal(f)
        q = quotient(f)
        ultra = is_ultrafilter(f)
        maximal = is_maximal(ideal)
        checks["axioms"] &= satisfies_filter_axioms(k, f.family)
        checks["all_principal"] &= f.is_principal()
        checks["round_trip"] &= ideal_to_filter(ideal) == f and filter_to_ideal(ideal_to_filter(ideal)) == ideal
        checks["membership_law"] &= membership_law_holds(f, ideal, member_sample)
        checks["ultrafilter_field_maximal"] &= ultra == q.is_field == maximal == (q.order == "total")
        checks["dimension_law"] &= q.dimension == bin(ideal.co_support).count("1")
        checks["collapse_to_scalars"] &= q.collapses_to_scalars == ultra
        checks["frechet_condition_unsatisfied"] &= not satisfies_frechet_condition(f)
        checks["embedding_injective"] &= embedding_injectivity_check(f)
        checks["order_compatible"] &= quotient_order_check(f, order_sample).ok
        entries.append(
            {
                "family": f.sorted_family(),
                "is_ultrafilter": ultra,
                "ideal_co_support": mask_elements(ideal.co_support),
                "ideal_maximal": maximal,
                "quotient": q.to_dict(),
            }
        )
    return {
        "universe_size": k,
        "mode": "exhaustive" if exhaustive else "principal",
        "candidates_checked": candidate_count(k) if exhaustive else None,
        "filter_count": len(filters),
        "ultrafilter_count": sum(1 for e in entries if e["is_ultrafilter"]),
        "filters": entries,
        "checks": checks,
    }
