"""Walkable worlds ``WW(t, u)``: points reachable from ``t`` in finitely many steps ``u``."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NonpositiveStep, NotMember, OrderViolation
from .germ import Germ, GermLike, _as_germ, epsilon, omega
from .magnitude import Kind, classify, is_finite, is_infinitely_large, is_infinitesimal, standard_part


class WWRelation(enum.Enum):
    EQUAL = "equal"
    DISJOINT = "disjoint"
    LEFT_IN_RIGHT = "left-in-right"
    RIGHT_IN_LEFT = "right-in-left"

    def swapped(self) -> "WWRelation":
        if self is WWRelation.LEFT_IN_RIGHT:
            return WWRelation.RIGHT_IN_LEFT
        if self is WWRelation.RIGHT_IN_LEFT:
            return WWRelation.LEFT_IN_RIGHT
        return self


@dataclass(frozen=True, eq=False)
class WalkableWorld:
    """``WW(center, step)``.

    Equality is semantic: two worlds are equal when they contain the same
    points, which the pair ``(center, step)`` does not determine uniquely.
    Worlds are therefore unhashable.
    """

    center: Germ
    step: Germ

    def __post_init__(self):
        object.__setattr__(self, "center", _as_germ(self.center))
        object.__setattr__(self, "step", _as_germ(self.step))
        if self.step.sign() <= 0:
            raise NonpositiveStep(f"step {self.step} is not positive")

    def __contains__(self, s) -> bool:
        return ww_member(self, s)

    def __eq__(self, other):
        if not isinstance(other, WalkableWorld):
            return NotImplemented
        return ww_relation(self, other) is WWRelation.EQUAL

    __hash__ = None

    def __str__(self):
        return f"WW({self.center}, {self.step})"

    def __repr__(self):
        return f"WalkableWorld({str(self.center)!r}, {str(self.step)!r})"


def ww_member(w: WalkableWorld, s: GermLike) -> bool:
    return is_finite((_as_germ(s) - w.center) / w.step)


def steps_needed(w: WalkableWorld, s: GermLike) -> int:
    """A natural ``n`` with ``s`` in the open interval ``(t - n*u, t + n*u)``."""
    q = (_as_germ(s) - w.center) / w.step
    if not is_finite(q):
        raise NotMember(f"{s} is not in {w}")
    return math.floor(abs(standard_part(q))) + 1


def ww_relation(a: WalkableWorld, b: WalkableWorld) -> WWRelation:
    big = a.step if a.step >= b.step else b.step
    if is_infinitely_large((a.center - b.center) / big):
        return WWRelation.DISJOINT
    ratio = a.step / b.step
    if classify(ratio).kind is Kind.FINITE_APPRECIABLE:
        return WWRelation.EQUAL
    if is_infinitesimal(ratio):
        return WWRelation.LEFT_IN_RIGHT
    return WWRelation.RIGHT_IN_LEFT


def ww_iso(a: WalkableWorld, s: GermLike) -> Germ:
    """Order isomorphism ``WW(t, u) -> WW(0, 1)``, ``s -> (s - t)/u``."""
    s = _as_germ(s)
    if not ww_member(a, s):
        raise NotMember(f"{s} is not in {a}")
    return (s - a.center) / a.step


def ww_iso_inverse(a: WalkableWorld, x: GermLike) -> Germ:
    """Inverse of :func:`ww_iso`: ``WW(0, 1) -> WW(t, u)``."""
    x = _as_germ(x)
    if not is_finite(x):
        raise NotMember(f"{x} is not in WW(0, 1)")
    return a.center + x * a.step


def probe_points(w: WalkableWorld) -> list[Germ]:
    """Deterministic sample: ``t +- k*u`` (k <= 5), ``t +- u*w``, ``t +- eps*u``."""
    t, u = w.center, w.step
    pts = [t + k * u for k in range(-5, 6)]
    pts += [t + u * omega(), t - u * omega(), t + epsilon() * u, t - epsilon() * u]
    return pts


def field_non_member(w: WalkableWorld) -> Germ:
    """A point outside ``w``, so ``w`` is never the whole field."""
    return w.center + w.step * omega()


def monad_separator(w: WalkableWorld) -> Germ | None:
    """A point in exactly one of ``w`` and monad(0), or ``None`` if none exists.

    ``None`` happens precisely when the center is infinitesimal and the step
    has w-degree -1: then both sets are ``{x : deg(x) <= -1}`` in Q(w).
    """
    t, u = w.center, w.step
    if not is_infinitesimal(t):
        return t
    if not is_infinitesimal(u):
        return t + u
    candidate = t + u * omega()
    if is_infinitesimal(candidate):
        return candidate
    return None


@dataclass(frozen=True)
class StepSituation:
    situation_id: int
    larger: Kind
    smaller: Kind

    def __str__(self):
        return str(self.situation_id)


_SITUATIONS = {
    (Kind.INFINITESIMAL, Kind.INFINITESIMAL): 1,
    (Kind.FINITE_APPRECIABLE, Kind.INFINITESIMAL): 2,
    (Kind.FINITE_APPRECIABLE, Kind.FINITE_APPRECIABLE): 3,
    (Kind.INFINITELY_LARGE, Kind.INFINITESIMAL): 4,
    (Kind.INFINITELY_LARGE, Kind.FINITE_APPRECIABLE): 5,
    (Kind.INFINITELY_LARGE, Kind.INFINITELY_LARGE): 6,
}


def step_situation(u: GermLike, v: GermLike) -> StepSituation:
    """Which of the six magnitude situations the steps ``u >= v > 0`` are in."""
    u, v = _as_germ(u), _as_germ(v)
    if u.sign() <= 0 or v.sign() <= 0:
        raise NonpositiveStep("steps must be positive")
    if v > u:
        raise OrderViolation(f"expected v <= u, got u={u}, v={v}")
    ku, kv = classify(u).kind, classify(v).kind
    return StepSituation(_SITUATIONS[(ku, kv)], ku, kv)
