import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from exkn.errors import DomainError
from exkn.k3_region import (
    K3Point,
    bound_q2_max,
    bracketing_segments,
    contains,
    mixture_identity_check,
    mixture_identity_sides,
    q_point,
    region_status,
    segment_rhs,
    segment_slope,
    segment_value,
    v_point,
)
from exkn.paintbox import (
    INF,
    RankedDiscreteDistribution as RDD,
    f_coeff,
    l_n_functional,
    law_of_kn,
    uniform,
)
from strategies import paintboxes, random_paintbox


def test_v_points():
    assert v_point(1) == (1, 0)
    assert v_point(2) == (F(1, 4), 0)
    assert v_point(3) == (F(1, 9), F(2, 9))
    assert v_point(4) == (F(1, 16), F(6, 16))
    assert v_point(INF) == (0, 1)
    assert v_point(5).q2 == 1 - F(1, 25) - F(12, 25)


def test_segment_slopes():
    assert segment_slope(1) == 0
    assert segment_slope(2) == F(-8, 5)
    slopes = [segment_slope(N) for N in range(1, 101)]
    assert all(a > b for a, b in zip(slopes, slopes[1:])) or all(a < b for a, b in zip(slopes, slopes[1:]))
    for N in range(1, 30):
        assert segment_slope(N) == 2 - f_coeff(N)


def test_segments_connect_vertices():
    for N in range(1, 40):
        a, b = v_point(N), v_point(N + 1)
        assert segment_value(a.q1, a.q3, N) == segment_rhs(N)
        assert segment_value(b.q1, b.q3, N) == segment_rhs(N)
        assert (b.q3 - a.q3) / (b.q1 - a.q1) == segment_slope(N)


def test_bracketing():
    assert bracketing_segments(F(1, 9)) == [2, 3]
    assert bracketing_segments(F(1, 10)) == [3]
    assert bracketing_segments(F(1, 2)) == [1]


def test_contains_examples():
    assert contains(*v_point(3))
    assert not contains(F(1, 9), F(1, 100))
    assert contains(F(1, 6), F(1, 6))
    assert contains(0, 1)
    assert not contains(0, F(1, 2))
    assert not contains(F(1, 2), F(2, 3))
    assert not contains(F(-1, 10), F(1, 2))


def test_region_status_at_vertex():
    st_ = region_status(F(1, 9), F(2, 9))
    assert st_.inside and st_.segments == (2, 3) and st_.tight == (2, 3)


def test_q2_bound_at_u2():
    assert q_point(uniform(2)).q2 == F(3, 4)


def test_q2_bound_random():
    rng = random.Random(1)
    for i in range(10_000):
        p = random_paintbox(rng, max_atoms=8, dust=i % 3 != 0)
        assert q_point(p).q2 <= F(3, 4)


def test_q2_bound_values():
    assert bound_q2_max(3) == F(3, 4)
    assert bound_q2_max(4) == F(7, 8)
    assert bound_q2_max(10) == F(511, 512)
    for n in range(3, 11):
        assert law_of_kn(uniform(2), n).at(2) == bound_q2_max(n)
    with pytest.raises(DomainError):
        bound_q2_max(2)


@given(paintboxes(max_atoms=6), st.integers(3, 8))
def test_q_n2_bound_property(p, n):
    assert law_of_kn(p, n).at(2) <= bound_q2_max(n)


@given(paintboxes(max_atoms=8))
def test_soundness_property(p):
    assert contains(*q_point(p))


def test_vertices_tight_and_perturbation_rejected():
    for N in range(1, 51):
        v = v_point(N)
        assert contains(*v)
        assert l_n_functional(uniform(N), N) == segment_rhs(N)
    for N in range(2, 21):
        v = v_point(N)
        assert not contains(v.q1, v.q3 - F(1, 10**6))


def test_appending_small_atom_decreases_l_n():
    # a small new atom carved out of the dust lowers L_N
    rng = random.Random(3)
    checked = 0
    for _ in range(300):
        p = random_paintbox(rng, max_atoms=5, dust=True)
        if not p.dust:
            continue
        N = rng.randint(1, 8)
        bound = min(3 / f_coeff(N), p.dust)
        eps = bound * F(rng.randint(1, 99), 100)
        q = RDD(p.atoms + (eps,))
        assert l_n_functional(q, N) < l_n_functional(p, N)
        checked += 1
    assert checked > 100


def test_pair_transform_decreases_l_n():
    # two distinct atoms a > b: merge them if a + b < 2/f(N), average them if a + b > 2/f(N)
    rng = random.Random(5)
    checked = 0
    for _ in range(400):
        p = random_paintbox(rng, max_atoms=6, dust=True, min_atoms=2)
        N = rng.randint(2, 8)
        i, j = rng.sample(range(len(p.atoms)), 2)
        a, b = p.atoms[i], p.atoms[j]
        if a == b or a + b == 2 / f_coeff(N):
            continue
        rest = tuple(x for k, x in enumerate(p.atoms) if k not in (i, j))
        if a + b < 2 / f_coeff(N):
            q = RDD(rest + (a + b,))
        else:
            q = RDD(rest + ((a + b) / 2, (a + b) / 2))
        assert l_n_functional(q, N) < l_n_functional(p, N)
        checked += 1
    assert checked > 100


def test_mixture_identity():
    for N in range(1, 11):
        for lam in (0, F(1, 4), F(1, 2), F(3, 4), 1):
            assert mixture_identity_check(N, lam)
    left, right = mixture_identity_sides(1, F(1, 2))
    assert left == right == K3Point(F(7, 16), 0)
    assert mixture_identity_check(3, F(1, 3))


@given(st.integers(1, 8), st.fractions(min_value=0, max_value=1, max_denominator=30))
def test_mixture_identity_property(N, lam):
    assert mixture_identity_check(N, lam)
