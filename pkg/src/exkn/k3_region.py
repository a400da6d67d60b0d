"""The set of achievable laws of K_3, drawn in the (q1, q3) plane.

The region is the convex hull of the uniform-sampling points
v_N = (1/N^2, (N-1)(N-2)/N^2) together with (0, 1). Its lower boundary is the
polygonal chain through consecutive v_N; its upper boundary is q1 + q3 = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .errors import DomainError
from .exact_geom import as_fraction
from .paintbox import INF, RankedDiscreteDistribution, q3_closed, uniform


class K3Point(NamedTuple):
    q1: Fraction
    q3: Fraction

    @property
    def q2(self) -> Fraction:
        return 1 - self.q1 - self.q3


def q_point(p: RankedDiscreteDistribution) -> K3Point:
    q1, _, q3 = q3_closed(p)
    return K3Point(q1, q3)


def v_point(N) -> K3Point:
    if N == INF:
        return K3Point(Fraction(0), Fraction(1))
    if N < 1:
        raise DomainError("N must be a positive integer or infinity")
    return K3Point(Fraction(1, N * N), Fraction((N - 1) * (N - 2), N * N))


def segment_slope(N: int) -> Fraction:
    """Slope of the segment from v_N to v_{N+1}."""
    if N < 1:
        raise DomainError("N must be >= 1")
    return Fraction(-(N - 1) * (3 * N + 2), 2 * N + 1)


def segment_rhs(N: int) -> Fraction:
    return Fraction(2 * N - 2, 2 * N + 1)


def segment_value(q1, q3, N: int) -> Fraction:
    """q3 - slope * q1; at least segment_rhs(N) on the region."""
    return as_fraction(q3) - segment_slope(N) * as_fraction(q1)


def bracketing_segments(q1) -> list[int]:
    """Indices N of the lower-boundary segments whose q1-range contains q1.

    Segment N spans 1/(N+1)^2 <= q1 <= 1/N^2; at a vertex abscissa both
    neighbours are returned.
    """
    q1 = as_fraction(q1)
    if not 0 < q1 <= 1:
        raise DomainError("bracketing needs 0 < q1 <= 1")
    inv = q1.denominator // q1.numerator  # floor(1/q1)
    N = isqrt(inv)
    if Fraction(1, N * N) == q1 and N >= 2:
        return [N - 1, N]
    return [N]


@dataclass(frozen=True)
class RegionStatus:
    inside: bool
    segments: tuple  # lower-boundary segments checked
    tight: tuple  # those holding with equality
    reason: str


def region_status(q1, q3) -> RegionStatus:
    q1, q3 = as_fraction(q1), as_fraction(q3)
    if q1 < 0 or q1 > 1 or q3 < 0 or q1 + q3 > 1:
        return RegionStatus(False, (), (), "outside the probability simplex")
    if q1 == 0:
        inside = q3 == 1
        return RegionStatus(inside, (), (), "vertex (0,1)" if inside else "q1 = 0 requires q3 = 1")
    segs = bracketing_segments(q1)
    tight = []
    for N in segs:
        val = segment_value(q1, q3, N)
        rhs = segment_rhs(N)
        if val < rhs:
            return RegionStatus(False, tuple(segs), (), f"below segment {N}")
        if val == rhs:
            tight.append(N)
    if tight:
        reason = "on lower boundary"
    elif q1 + q3 == 1:
        reason = "on upper boundary q1 + q3 = 1"
    else:
        reason = "interior"
    return RegionStatus(True, tuple(segs), tuple(tight), reason)


def contains(q1, q3) -> bool:
    return region_status(q1, q3).inside


def bound_q2_max(n: int) -> Fraction:
    """Largest possible P(K_n = 2): 1 - 2^(1-n)."""
    if n < 3:
        raise DomainError("bound_q2_max needs n >= 3")
    return 1 - Fraction(1, 2 ** (n - 1))


def two_uniform_mixture(N: int, lam) -> RankedDiscreteDistribution:
    """lam * u_N + (1 - lam) * u_{2N} as a ranked distribution."""
    lam = as_fraction(lam)
    if not 0 <= lam <= 1:
        raise DomainError("mixing weight must be in [0, 1]")
    hi = (1 + lam) / (2 * N)
    lo = (1 - lam) / (2 * N)
    return RankedDiscreteDistribution((hi,) * N + (lo,) * N)


def mixture_identity_sides(N: int, lam) -> tuple[K3Point, K3Point]:
    lam = as_fraction(lam)
    left = q_point(two_uniform_mixture(N, lam))
    a, b = q_point(uniform(N)), q_point(uniform(2 * N))
    w = lam * lam
    right = K3Point(w * a.q1 + (1 - w) * b.q1, w * a.q3 + (1 - w) * b.q3)
    return left, right


def mixture_identity_check(N: int, lam) -> bool:
    left, right = mixture_identity_sides(N, lam)
    return left == right
