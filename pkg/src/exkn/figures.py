"""Data series behind the standard plots of the K_3 region and the
two-parameter family. Each builder returns a list of row dicts; values are
ints, Fractions, QuadraticNumbers or (lossy) floats.
"""
from __future__ import annotations

from fractions import Fraction

from .combinatorics import partitions_of
from .eppf import iter_region_hulls
from .k3_region import q_point, segment_rhs, segment_slope, v_point
from .paintbox import INF, RankedDiscreteDistribution
from .two_param import (
    ParamsAT,
    dirichlet_ray_law,
    k3_law_at,
    q1_m,
    q2_m,
    q2_max,
    q3_m,
    tau,
)

LATTICE_STEPS = 40


def _frange(lo: Fraction, hi: Fraction, step: Fraction):
    x = lo
    while x <= hi:
        yield x
        x += step


def figure1(n_max: int = 30) -> list[dict]:
    rows = []
    for N in list(range(1, n_max + 1)) + [INF]:
        v = v_point(N)
        rows.append({"series": "vertex", "N": "inf" if N == INF else N, "q1": v.q1, "q3": v.q3})
    for N in range(1, n_max):
        rows.append({"series": "segment", "N": N, "slope": segment_slope(N), "rhs": segment_rhs(N)})
    return rows


def figure2(ms=(3, 4, 5), steps: int = LATTICE_STEPS) -> list[dict]:
    """Images of the lattice {p : p_i in (1/steps) Z, sum p_i = 1} on m atoms.

    The map is symmetric in the atoms, so only ranked lattice points are
    visited; the image is the same set.
    """
    rows = []
    for m in ms:
        seen = set()
        for lam in partitions_of(steps):
            if len(lam) > m:
                continue
            pt = q_point(RankedDiscreteDistribution(tuple(Fraction(x, steps) for x in lam)))
            if pt not in seen:
                seen.add(pt)
                rows.append({"m": m, "q1": pt.q1, "q3": pt.q3})
    return rows


def figure3(levels=(4, 5, 7, 12, 19, 41)) -> list[dict]:
    rows = []
    wanted = set(levels)
    for m, hull in iter_region_hulls(min(levels), max(levels)):
        if m in wanted:
            for i, v in enumerate(hull):
                rows.append({"m": m, "vertex": i, "q1": v[0], "q3": v[1]})
    return rows


def figure5(theta_max=Fraction(5), step=Fraction(1, 20)) -> list[dict]:
    rows = []
    for t in _frange(Fraction(0), Fraction(theta_max), Fraction(step)):
        rows.append({"series": "curve", "theta": t, "q1": q1_m(0, t), "q2": q2_m(0, t), "q3": q3_m(0, t)})
    t = tau(0)
    rows.append({"series": "tau", "theta": t, "q1": q1_m(0, t), "q2": q2_m(0, t), "q3": q3_m(0, t)})
    return rows


def figure6(step=Fraction(1, 20), theta_max=Fraction(4), levels=None) -> list[dict]:
    """q2 over an (alpha, theta) grid, the q1 = q3 curve, and the rays tangent
    to each level curve where it meets q1 = q3."""
    step = Fraction(step)
    rows = []
    for a in _frange(Fraction(0), 1 - step, step):
        for t in _frange(-1 + step, Fraction(theta_max), step):
            if t > -a:
                rows.append({"series": "grid", "alpha": a, "theta": t, "q2": k3_law_at(ParamsAT(a, t))[1]})
    for m in _frange(Fraction(0), Fraction(3), Fraction(1, 10)):
        t = tau(m)
        rows.append({"series": "q1_eq_q3", "m": m, "alpha": m * (1 + t), "theta": t, "q2": q2_max(m)})
    for level in levels or [Fraction(i, 10) for i in range(1, 6)]:
        # q2_max(m) = level  <=>  sqrt((m+1)(m+2)) = m + c  with c = (9 - level)/6
        c = (9 - Fraction(level)) / 6
        m = (c * c - 2) / (3 - 2 * c)
        t = tau(m)
        rows.append({"series": "tangent", "level": Fraction(level), "m": m, "alpha": m * (1 + t), "theta": t})
    return rows


def figure7(ms=(Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(4)), samples: int = 40) -> list[dict]:
    rows = []
    # alpha = 0 ray and its image, the h = 0 curve
    for i in range(1, samples + 1):
        t = Fraction(i, 4)
        q1, _, q3 = k3_law_at(ParamsAT(0, t))
        rows.append({"series": "ewens", "m": 0, "alpha": Fraction(0), "theta": t, "q1": q1, "q3": q3})
    for m in ms:
        lo, hi = -m / (m + 1), (1 - m) / m
        for i in range(1, samples):
            t = lo + (hi - lo) * Fraction(i, samples)
            q1, _, q3 = k3_law_at(ParamsAT(m * (1 + t), t))
            rows.append({"series": "ray", "m": m, "alpha": m * (1 + t), "theta": t, "q1": q1, "q3": q3})
    rows.append({"series": "upper", "q1": Fraction(1), "q3": Fraction(0)})
    rows.append({"series": "upper", "q1": Fraction(0), "q3": Fraction(1)})
    return rows


def figure8(ms=range(2, 7), samples: int = 40) -> list[dict]:
    rows = []
    alphas = [-Fraction(i, 4) for i in range(1, samples + 1)] + [Fraction(-10**j) for j in range(2, 5)]
    for m in ms:
        for a in alphas:
            q1, _, q3 = dirichlet_ray_law(m, a)
            rows.append({"series": "dirichlet", "m": m, "alpha": a, "q1": q1, "q3": q3})
        v = v_point(m)
        rows.append({"series": "limit", "m": m, "q1": v.q1, "q3": v.q3})
    for i in range(1, samples + 1):
        q1, _, q3 = k3_law_at(ParamsAT(0, Fraction(i, 4)))
        rows.append({"series": "h_zero", "theta": Fraction(i, 4), "q1": q1, "q3": q3})
    return rows


FIGURES = {1: figure1, 2: figure2, 3: figure3, 5: figure5, 6: figure6, 7: figure7, 8: figure8}
