import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import germgen
from nonarch import (
    NonpositiveStep,
    NotMember,
    OrderViolation,
    WalkableWorld,
    WWRelation,
    classify,
    epsilon,
    in_galaxy,
    omega,
    step_situation,
    ww_iso,
    ww_member,
    ww_relation,
)
from nonarch.magnitude import is_finite, is_infinitesimal
from nonarch.worlds import field_non_member, monad_separator, probe_points, steps_needed, ww_iso_inverse

w = omega()
eps = epsilon()
WW = WalkableWorld


@st.composite
def worlds(draw, max_deg=3):
    rng = random.Random(draw(st.integers(0, 2**32)))
    return WW(germgen.germ(rng, max_deg), germgen.positive_germ(rng, max_deg))


# simple structured worlds so that every relation shows up often
STEPS = [eps**2, eps, Fraction(1, 2), 1, 3, w, w**2]
CENTERS = [0, 1, eps, w, -w, w**2, w + eps]
FAMILY = [WW(c, u) for c in CENTERS for u in STEPS]


def test_member_examples():
    assert ww_member(WW(0, 1), 100)
    assert not ww_member(WW(0, 1), w)
    assert ww_member(WW(w, eps), w + 5 * eps)
    assert 100 in WW(0, 1)


def test_boundary_point_is_member():
    # (s - t)/u = 3 exactly: reachable with 4 open steps
    world = WW(0, 1)
    assert ww_member(world, 3)
    assert steps_needed(world, 3) == 4
    assert -4 < 3 < 4


def test_world_requires_positive_step():
    with pytest.raises(NonpositiveStep):
        WW(0, 0)
    with pytest.raises(NonpositiveStep):
        WW(0, -eps)


def test_relation_examples():
    assert ww_relation(WW(0, 1), WW(5, 3)) is WWRelation.EQUAL
    assert ww_relation(WW(0, 1), WW(w, 1)) is WWRelation.DISJOINT
    assert ww_relation(WW(0, eps), WW(0, 1)) is WWRelation.LEFT_IN_RIGHT
    assert ww_relation(WW(0, 1), WW(0, eps)) is WWRelation.RIGHT_IN_LEFT
    assert WW(0, 1) == WW(5, 3)
    with pytest.raises(TypeError):
        hash(WW(0, 1))


def test_relation_equal_oracle_by_rewrite_rules():
    # WW(5, 3) = WW(0, 3) since 5 is in WW(0, 3); WW(0, 3) = WW(0, 1) since 3*1 <= 3 <= 4*1
    assert ww_member(WW(0, 3), 5)
    assert 3 * 1 <= 3 <= 4 * 1


def test_iso_examples():
    assert ww_iso(WW(5, 2), 9) == 2
    s = (3 * w + 1) / (w + 7)
    assert ww_iso(WW(0, 1), s) == s
    assert ww_iso(WW(w, eps), w + 5 * eps) == 5
    with pytest.raises(NotMember):
        ww_iso(WW(0, 1), w)


@settings(max_examples=100, deadline=None)
@given(worlds(), worlds(), st.integers(-5, 5), st.integers(-5, 5))
def test_iso_is_order_isomorphism(a, b, j, k):
    s1 = a.center + j * a.step + eps * a.step
    s2 = a.center + k * a.step
    x1, x2 = ww_iso(a, s1), ww_iso(a, s2)
    assert in_galaxy(x1, 0) and in_galaxy(x2, 0)
    assert (s1 < s2) == (x1 < x2)
    # composing with the inverse of another world's iso maps a into b, preserving order
    y1, y2 = ww_iso_inverse(b, x1), ww_iso_inverse(b, x2)
    assert ww_member(b, y1) and ww_member(b, y2)
    assert (s1 < s2) == (y1 < y2)
    assert ww_iso_inverse(a, x1) == s1


def test_step_situation_examples():
    assert step_situation(w, eps).situation_id == 4
    assert step_situation(1, Fraction(1, 2)).situation_id == 3
    assert step_situation(eps, eps**2).situation_id == 1
    assert step_situation(1, eps).situation_id == 2
    assert step_situation(w, 7).situation_id == 5
    assert step_situation(w**2, w).situation_id == 6
    with pytest.raises(OrderViolation):
        step_situation(eps, 1)
    with pytest.raises(NonpositiveStep):
        step_situation(1, 0)


@settings(max_examples=100, deadline=None)
@given(worlds(), st.integers(-5, 5))
def test_membership_rewrite_law(a, k):
    s = a.center + k * a.step + eps * a.step
    assert ww_member(a, s)
    assert ww_relation(WW(s, a.step), a) is WWRelation.EQUAL


@settings(max_examples=100, deadline=None)
@given(worlds(), st.integers(1, 20), st.fractions(0, 1))
def test_step_rescaling_law(a, m, frac):
    v = a.step * (m + frac)
    assert m * a.step <= v <= (m + 1) * a.step
    assert ww_relation(WW(a.center, v), a) is WWRelation.EQUAL


def _ground_truth_consistent(a, b, rel):
    probes = probe_points(a) + probe_points(b)
    in_a = [ww_member(a, p) for p in probes]
    in_b = [ww_member(b, p) for p in probes]
    if rel is WWRelation.EQUAL:
        return in_a == in_b
    if rel is WWRelation.DISJOINT:
        return not any(x and y for x, y in zip(in_a, in_b))
    inner, outer = (in_a, in_b) if rel is WWRelation.LEFT_IN_RIGHT else (in_b, in_a)
    return all(o for i, o in zip(inner, outer) if i) and any(o and not i for i, o in zip(inner, outer))


def test_relation_matches_membership_on_structured_family():
    seen = set()
    for a, b in itertools.product(FAMILY, repeat=2):
        rel = ww_relation(a, b)
        seen.add(rel)
        assert _ground_truth_consistent(a, b, rel), (a, b, rel)
        assert ww_relation(b, a) is rel.swapped()
    assert seen == set(WWRelation)


@settings(max_examples=150, deadline=None)
@given(worlds(), worlds())
def test_relation_matches_membership_random(a, b):
    rel = ww_relation(a, b)
    assert _ground_truth_consistent(a, b, rel)
    assert ww_relation(b, a) is rel.swapped()


def test_equal_is_equivalence_on_family():
    eq = {(i, j) for i, j in itertools.product(range(len(FAMILY)), repeat=2)
          if ww_relation(FAMILY[i], FAMILY[j]) is WWRelation.EQUAL}
    n = len(FAMILY)
    assert all((i, i) in eq for i in range(n))
    assert all((j, i) in eq for i, j in eq)
    for i, j in eq:
        for k in range(n):
            if (j, k) in eq:
                assert (i, k) in eq


def test_galaxy_is_the_unit_world():
    unit = WW(0, 1)
    for p in [0, 1, -1000, Fraction(1, 3), 5 + eps, eps, w, -w, w**2, eps * w + 3, (2 * w + 1) / (w + 5)]:
        assert ww_member(unit, p) == is_finite(p)


def test_world_is_never_the_whole_field():
    for a in FAMILY:
        p = field_non_member(a)
        assert not ww_member(a, p)


def test_world_differs_from_monad_except_degree_minus_one_steps():
    for a in FAMILY:
        p = monad_separator(a)
        degree_minus_one = is_infinitesimal(a.center) and a.step.degree == -1
        if degree_minus_one:
            assert p is None
        else:
            assert p is not None
            assert ww_member(a, p) != is_infinitesimal(p)


def test_unit_infinitesimal_world_is_the_monad_in_rational_germs():
    # every infinitesimal of Q(w) has w-degree <= -1, so x/eps stays finite
    a = WW(0, eps)
    rng = random.Random(7)
    for _ in range(300):
        x = germgen.germ(rng, 4)
        assert ww_member(a, x) == is_infinitesimal(x)


def test_infinitely_many_disjoint_worlds():
    u = Fraction(3, 2)
    fam = [WW(k * u * w, u) for k in range(25)]
    for a, b in itertools.combinations(fam, 2):
        assert ww_relation(a, b) is WWRelation.DISJOINT


def test_unbounded_nesting():
    for t in (0, w, 1 + eps):
        for k in range(8):
            assert ww_relation(WW(t, eps ** (k + 1)), WW(t, eps**k)) is WWRelation.LEFT_IN_RIGHT


def test_finite_step_ratio_forces_equality():
    # with v <= u <= n*v and close centers only equality is possible
    for a, b in itertools.product(FAMILY, repeat=2):
        u, v = max(a.step, b.step), min(a.step, b.step)
        ratio_finite = is_finite(u / v)
        centers_close = is_finite((a.center - b.center) / u)
        if ratio_finite and centers_close:
            assert ww_relation(a, b) is WWRelation.EQUAL
        if ww_relation(a, b) in (WWRelation.LEFT_IN_RIGHT, WWRelation.RIGHT_IN_LEFT):
            assert classify(u / v).is_infinitely_large
            assert all(n * v <= u for n in (1, 10, 10**6))
