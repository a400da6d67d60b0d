import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from exkn.combinatorics import cluster_count, partitions_of
from exkn.errors import DomainError
from exkn.exact_geom import QuadraticNumber
from exkn.paintbox import law_of_kn, uniform
from exkn.two_param import (
    EXCEPTIONAL,
    MAIN,
    ParamsAT,
    dirichlet_ray_law,
    dual_params,
    dual_theta,
    eppf_at,
    h,
    in_m_domain,
    inverse_map,
    k3_law_at,
    m_domain,
    params_on_ray,
    phi_increases,
    phi_m,
    q1_m,
    q2_m,
    q2_max,
    q3_m,
    tau,
    varphi_m_relation_check,
)
from oracles import crp_partition_probability, set_partitions


def random_ray_point(rng):
    """A rational m >= 0 and a theta strictly inside its open domain."""
    m = F(rng.randint(0, 40), rng.randint(1, 12)) if rng.random() < 0.9 else F(0)
    lo, hi = m_domain(m)
    if hi is None:
        theta = F(rng.randint(1, 400), rng.randint(1, 40))
    else:
        theta = lo + (hi - lo) * F(rng.randint(1, 999), 1000)
    return m, theta


def random_main(rng):
    alpha = F(rng.randint(0, 99), 100)
    theta = -alpha + F(rng.randint(1, 500), rng.randint(1, 50))
    return ParamsAT(alpha, theta)


@st.composite
def ray_points(draw):
    return random_ray_point(random.Random(draw(st.integers(0, 2**32))))


def test_regimes():
    assert ParamsAT(F(1, 2), F(1, 2)).regime == MAIN
    p = ParamsAT(-1, 3)
    assert p.regime == EXCEPTIONAL and p.atoms == 3
    for bad in [(0, 0), (1, 1), (-1, F(5, 2)), (F(1, 2), F(-1, 2)), (-1, 0)]:
        with pytest.raises(DomainError):
            ParamsAT(*bad)


def test_eppf_examples():
    assert eppf_at(ParamsAT(0, 1), (3,)) == F(1, 3)
    assert eppf_at(ParamsAT(F(1, 2), F(1, 2)), (2, 1)) == F(2, 15)
    for t in (F(1, 3), 1, 7):
        assert eppf_at(ParamsAT(0, t), (1, 1, 1)) == F(t) ** 2 / ((1 + F(t)) * (2 + F(t)))


@pytest.mark.parametrize(
    "params", [ParamsAT(0, 1), ParamsAT(F(1, 2), F(1, 2)), ParamsAT(F(1, 3), F(-1, 4)), ParamsAT(-1, 3), ParamsAT(F(-1, 2), 2)]
)
def test_eppf_against_crp(params):
    for n in range(1, 7):
        for blocks in set_partitions(n):
            lam = [len(b) for b in blocks]
            assert eppf_at(params, lam) == crp_partition_probability(params.alpha, params.theta, blocks)


def test_k3_law_examples():
    assert k3_law_at(ParamsAT(0, 1)) == (F(1, 3), F(1, 2), F(1, 6))
    assert k3_law_at(ParamsAT(-1, 2)) == (F(1, 2), F(1, 2), 0)
    assert k3_law_at(ParamsAT(F(1, 2), F(1, 2))) == (F(1, 5), F(2, 5), F(2, 5))


def test_k3_law_two_paths_random():
    rng = random.Random(2)
    for _ in range(1000):
        p = random_main(rng)
        law = k3_law_at(p)
        assert sum(law) == 1
        by_eppf = [F(0)] * 3
        for lam in partitions_of(3):
            by_eppf[len(lam) - 1] += cluster_count(lam) * eppf_at(p, lam)
        assert tuple(by_eppf) == law


def test_ray_coordinates_match_params():
    rng = random.Random(4)
    for _ in range(200):
        m, t = random_ray_point(rng)
        law = k3_law_at(params_on_ray(m, t))
        assert law == (q1_m(m, t), q2_m(m, t), q3_m(m, t))
        assert varphi_m_relation_check(m, law[0], law[2])


def test_tau_examples():
    s2 = QuadraticNumber.sqrt(2)
    assert tau(0) == s2
    assert q2_max(0) == 9 - 6 * s2
    assert q1_m(0, s2) == q3_m(0, s2) == 2 / ((1 + s2) * (2 + s2))
    t1 = tau(1)
    assert t1 == (QuadraticNumber.sqrt(6) - 4) / 5
    assert F(-1, 2) < t1 < 0


@pytest.mark.parametrize("m", [0, F(1, 2), 1, 2, 5])
def test_tau_identities(m):
    t = tau(m)
    r = QuadraticNumber.sqrt((F(m) + 1) * (F(m) + 2))
    assert q1_m(m, t) == q3_m(m, t)
    assert q2_m(m, t) == 9 - 6 * (r - m)


def test_tau_rejects_negative():
    with pytest.raises(DomainError):
        tau(-1)


def test_q_monotone_along_ray():
    rng = random.Random(6)
    for _ in range(200):
        m, a = random_ray_point(rng)
        lo, hi = m_domain(m)
        b = F(rng.randint(1, 400), rng.randint(1, 40)) if hi is None else lo + (hi - lo) * F(rng.randint(1, 999), 1000)
        if a == b:
            continue
        a, b = min(a, b), max(a, b)
        assert q1_m(m, a) > q1_m(m, b)
        assert q3_m(m, a) < q3_m(m, b)
        t = tau(m)
        if b <= t:
            assert q2_m(m, a) < q2_m(m, b)
        elif a >= t:
            assert q2_m(m, a) > q2_m(m, b)
        assert q2_m(m, a) <= q2_max(m)


def test_dual_theta_examples():
    assert dual_theta(0, 1) == 2
    assert dual_theta(1, F(-1, 4)) == F(-4, 11)
    with pytest.raises(DomainError):
        dual_theta(0, 0)
    with pytest.raises(DomainError):
        dual_theta(1, 0)


def test_duality_random():
    rng = random.Random(8)
    for _ in range(1000):
        m, t = random_ray_point(rng)
        d = dual_theta(m, t)
        assert in_m_domain(m, d)
        assert q1_m(m, d) == q3_m(m, t)
        assert q2_m(m, d) == q2_m(m, t)
        assert dual_theta(m, d) == t


@given(ray_points())
def test_duality_property(mt):
    m, t = mt
    assert dual_theta(m, dual_theta(m, t)) == t


def test_h_examples():
    assert h(1, 0) == 0
    assert h(0, 1) == 0
    assert h(F(1, 3), F(1, 6)) == 0


def test_h_vanishes_on_ewens_image():
    rng = random.Random(10)
    for _ in range(1000):
        q1, _, q3 = k3_law_at(ParamsAT(0, F(rng.randint(1, 10**4), rng.randint(1, 100))))
        assert h(q1, q3) == 0


def test_varphi_examples():
    assert varphi_m_relation_check(0, F(1, 3), F(1, 6))
    assert varphi_m_relation_check(F(1, 3), F(1, 5), F(2, 5))
    assert not varphi_m_relation_check(0, F(1, 2), F(1, 2))


def test_inverse_examples():
    assert inverse_map(F(1, 3), F(1, 6)) == ParamsAT(0, 1)
    assert inverse_map(F(1, 5), F(2, 5)) == ParamsAT(F(1, 2), F(1, 2))
    q1, _, q3 = k3_law_at(ParamsAT(0, F(7, 3)))
    assert inverse_map(q1, q3).alpha == 0
    with pytest.raises(DomainError):
        inverse_map(1, 0)
    with pytest.raises(DomainError):
        inverse_map(F(1, 2), F(1, 100))


def test_inverse_roundtrip_params():
    rng = random.Random(12)
    for _ in range(1000):
        p = random_main(rng)
        q1, _, q3 = k3_law_at(p)
        assert inverse_map(q1, q3) == p


def test_inverse_roundtrip_region():
    rng = random.Random(13)
    done = 0
    while done < 1000:
        q1 = F(rng.randint(1, 199), 200)
        q3 = F(rng.randint(0, 199), 200)
        if q1 + q3 >= 1 or h(q1, q3) < 0:
            continue
        l1, _, l3 = k3_law_at(inverse_map(q1, q3))
        assert (l1, l3) == (q1, q3)
        done += 1


def test_phi_on_ray_image():
    rng = random.Random(14)
    for _ in range(100):
        m, t = random_ray_point(rng)
        q1, _, q3 = q1_m(m, t), None, q3_m(m, t)
        # the lower root is the image; the other root lies above q1 + q3 = 1
        assert phi_m(m, q1) == q3


def test_phi_monotone_in_m():
    rng = random.Random(15)
    for _ in range(200):
        q1 = F(rng.randint(1, 99), 100)
        a = F(rng.randint(0, 50), rng.randint(1, 10))
        b = a + F(rng.randint(1, 50), rng.randint(1, 10))
        assert phi_increases(q1, a, b)
        assert float(phi_m(b, q1)) > float(phi_m(a, q1)) - 1e-12
    with pytest.raises(DomainError):
        phi_increases(F(1, 2), 1, 1)


def test_dual_params_examples():
    p = ParamsAT(F(1, 2), F(1, 2))
    d = dual_params(p)
    assert d == ParamsAT(F(5, 13), F(2, 13))
    assert k3_law_at(d) == (F(2, 5), F(2, 5), F(1, 5))
    assert k3_law_at(d)[1] == F(2, 5)
    assert dual_params(ParamsAT(0, 3)) == ParamsAT(0, F(2, 3))
    with pytest.raises(DomainError):
        dual_params(ParamsAT(-1, 2))


def test_dual_params_printed_formula_is_transposed():
    # reading the two displayed formulas literally gives (2/13, 5/13), which does not swap
    wrong = ParamsAT(F(2, 13), F(5, 13))
    assert k3_law_at(wrong) != (F(2, 5), F(2, 5), F(1, 5))


def test_dual_params_fixed_point():
    p = inverse_map(F(1, 4), F(1, 4))
    assert dual_params(p) == p


def test_dual_params_random():
    rng = random.Random(16)
    for _ in range(300):
        p = random_main(rng)
        d = dual_params(p)
        a, b = k3_law_at(p), k3_law_at(d)
        assert (a[0], a[1], a[2]) == (b[2], b[1], b[0])
        assert dual_params(d) == p


def test_dirichlet_examples():
    assert dirichlet_ray_law(2, -1) == (F(1, 2), F(1, 2), 0)
    target = law_of_kn(uniform(3), 3)
    law = dirichlet_ray_law(3, -1000)
    assert all(abs(x - y) <= F(1, 100) for x, y in zip(law, target))
    for a in (-1, F(-1, 3), -50):
        assert dirichlet_ray_law(1, a) == (1, 0, 0)
    with pytest.raises(DomainError):
        dirichlet_ray_law(2, 0)


@pytest.mark.parametrize("m", range(2, 7))
def test_dirichlet_monotone_convergence(m):
    target = law_of_kn(uniform(m), 3)
    seq = [dirichlet_ray_law(m, a) for a in (-1, -10, -100, -1000)]
    for i in range(3):
        gaps = [abs(law[i] - target[i]) for law in seq]
        assert all(x > y or x == y == 0 for x, y in zip(gaps, gaps[1:]))
        signs = {(law[i] > target[i]) - (law[i] < target[i]) for law in seq}
        assert len(signs) == 1
