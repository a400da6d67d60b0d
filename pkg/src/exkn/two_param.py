"""The Ewens-Pitman (alpha, theta) family and its K_3 laws.

Along each ray alpha = m (1 + theta) there is an involution on theta that
swaps P(K_3 = 1) with P(K_3 = 3) and fixes P(K_3 = 2). Quantities involving
sqrt((m+1)(m+2)) are handled exactly with :class:`QuadraticNumber`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import as_partition, rising_factorial
from .eppf import EppfTable
from .errors import DomainError, VerificationError
from .exact_geom import QuadraticNumber, as_fraction

MAIN = "MAIN"
EXCEPTIONAL = "EXCEPTIONAL"

MAX_LEVEL = 30


@dataclass(frozen=True)
class ParamsAT:
    """Parameters (alpha, theta) of an Ewens-Pitman partition.

    MAIN: 0 <= alpha < 1 and theta > -alpha.
    EXCEPTIONAL: alpha < 0 and theta = -m alpha for a positive integer m.
    """

    alpha: Fraction
    theta: Fraction

    def __post_init__(self):
        a, t = as_fraction(self.alpha), as_fraction(self.theta)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "theta", t)
        if self.regime is None:
            raise DomainError(f"(alpha, theta) = ({a}, {t}) is not a valid parameter pair")

    @property
    def regime(self):
        a, t = self.alpha, self.theta
        if 0 <= a < 1 and t > -a:
            return MAIN
        if a < 0:
            r = t / -a
            if r.denominator == 1 and r >= 1:
                return EXCEPTIONAL
        return None

    @property
    def atoms(self) -> int:
        """Number of Dirichlet atoms m in the EXCEPTIONAL regime."""
        if self.regime != EXCEPTIONAL:
            raise DomainError("only exceptional parameters have a finite atom count")
        return int(self.theta / -self.alpha)

    @property
    def ray(self) -> Fraction:
        """m = alpha / (1 + theta), the ray through (0, -1) carrying the point."""
        if self.regime != MAIN:
            raise DomainError("ray parameter is defined for the main regime only")
        return self.alpha / (1 + self.theta)


def eppf_at(params: ParamsAT, lam) -> Fraction:
    lam = as_partition(lam)
    n = sum(lam)
    if n > MAX_LEVEL:
        raise DomainError(f"level must be <= {MAX_LEVEL}")
    a, t = params.alpha, params.theta
    num = Fraction(1)
    for i in range(len(lam)):
        num *= t + i * a
    for part in lam:
        num *= rising_factorial(1 - a, part - 1)
    return num / rising_factorial(t, n)


def k3_law_at(params: ParamsAT) -> tuple[Fraction, Fraction, Fraction]:
    a, t = params.alpha, params.theta
    den = (1 + t) * (2 + t)
    law = ((1 - a) * (2 - a) / den, 3 * (1 - a) * (t + a) / den, (t + a) * (t + 2 * a) / den)
    if sum(law) != 1:
        raise VerificationError("K_3 law does not sum to 1")
    return law


def ewens_pitman_table(params: ParamsAT, level: int) -> EppfTable:
    return EppfTable.from_function(level, lambda lam: eppf_at(params, lam))


# -- the m-ray parameterization ------------------------------------------------

def m_domain(m) -> tuple:
    """Open theta-interval of ray m: (-m/(m+1), (1-m)/m); upper end None for m = 0."""
    m = as_fraction(m)
    if m < 0:
        raise DomainError("ray parameter m must be >= 0")
    hi = None if m == 0 else (1 - m) / m
    return -m / (m + 1), hi


def in_m_domain(m, theta) -> bool:
    lo, hi = m_domain(m)
    return theta > lo and (hi is None or theta < hi)


def q1_m(m, theta):
    return (1 - m - m * theta) * (2 - m - m * theta) / ((1 + theta) * (2 + theta))


def q2_m(m, theta):
    return 3 * (1 - m - m * theta) * (m + (m + 1) * theta) / ((1 + theta) * (2 + theta))


def q3_m(m, theta):
    return (m + (m + 1) * theta) * (2 * m + (2 * m + 1) * theta) / ((1 + theta) * (2 + theta))


def params_on_ray(m, theta) -> ParamsAT:
    m, theta = as_fraction(m), as_fraction(theta)
    return ParamsAT(m * (1 + theta), theta)


def q2_max(m) -> QuadraticNumber:
    """9 - 6 (sqrt((m+1)(m+2)) - m), the peak of P(K_3 = 2) along ray m."""
    m = as_fraction(m)
    return 9 - 6 * (QuadraticNumber.sqrt((m + 1) * (m + 2)) - m)


def tau(m) -> QuadraticNumber:
    """The theta on ray m where q1 = q3 and q2 peaks."""
    m = as_fraction(m)
    if m < 0:
        raise DomainError("tau needs m >= 0")
    root = QuadraticNumber.sqrt((m + 1) * (m + 2))
    t = (-m * m - 3 * m + root) / (1 + 3 * m + m * m)
    lo, hi = m_domain(m)
    if not (t > lo and (hi is None or t < hi)):
        raise VerificationError(f"tau({m}) left its domain")
    if q1_m(m, t) != q3_m(m, t) or q2_m(m, t) != q2_max(m):
        raise VerificationError(f"tau({m}) identities failed")
    return t


def dual_theta(m, theta) -> Fraction:
    """The other theta on ray m with the same P(K_3 = 2)."""
    m, theta = as_fraction(m), as_fraction(theta)
    if not in_m_domain(m, theta):
        raise DomainError(f"theta = {theta} is outside the open domain of ray m = {m}")
    c = m * (3 + m) * (1 + theta)
    out = (2 - c) / (theta + c)
    if not in_m_domain(m, out):
        raise VerificationError("dual theta left the domain")
    return out


def h(q1, q3) -> Fraction:
    """Zero exactly on the image of the Ewens (alpha = 0) ray."""
    q1, q3 = as_fraction(q1), as_fraction(q3)
    return 4 * (q1 + q3) + 5 * q1 * q3 - 2 * (q1 * q1 + q3 * q3) - 2


def varphi_relation(m, q1, q3) -> Fraction:
    """(4+3m)(q1+q3) + 5 q1 q3 - 2(q1^2+q3^2) - 2 - 3m; vanishes on the image of ray m."""
    m, q1, q3 = as_fraction(m), as_fraction(q1), as_fraction(q3)
    return (4 + 3 * m) * (q1 + q3) + 5 * q1 * q3 - 2 * (q1 * q1 + q3 * q3) - 2 - 3 * m


def varphi_m_relation_check(m, q1, q3) -> bool:
    return varphi_relation(m, q1, q3) == 0


def _phi_radicand(m, q1):
    return m * m + 6 * q1 * m + q1 * (8 + q1)


def phi_m(m, q1) -> QuadraticNumber:
    """q3 as a function of q1 on the image of ray m (the root below q1 + q3 = 1)."""
    m, q1 = as_fraction(m), as_fraction(q1)
    root = QuadraticNumber.sqrt(_phi_radicand(m, q1))
    return 1 + Fraction(3, 4) * m + Fraction(5, 4) * q1 - Fraction(3, 4) * root


def phi_increases(q1, m_lo, m_hi) -> bool:
    """Exact test of phi_{m_hi}(q1) > phi_{m_lo}(q1).

    Reduces to m_lo + m_hi + 6 q1 < sqrt(d_lo) + sqrt(d_hi) and squares twice.
    """
    q1, m_lo, m_hi = as_fraction(q1), as_fraction(m_lo), as_fraction(m_hi)
    if not m_hi > m_lo:
        raise DomainError("need m_hi > m_lo")
    d_lo, d_hi = _phi_radicand(m_lo, q1), _phi_radicand(m_hi, q1)
    lhs = m_lo + m_hi + 6 * q1
    if lhs <= 0:
        return True
    gap = lhs * lhs - d_lo - d_hi  # need gap < 2 sqrt(d_lo d_hi)
    if gap < 0:
        return True
    return gap * gap < 4 * d_lo * d_hi


def inverse_map(q1, q3) -> ParamsAT:
    """(alpha, theta) in the main regime whose K_3 law has these q1, q3."""
    q1, q3 = as_fraction(q1), as_fraction(q3)
    hv = h(q1, q3)
    if hv < 0 or q1 + q3 >= 1:
        raise DomainError(f"(q1, q3) = ({q1}, {q3}) is outside the region h >= 0, q1 + q3 < 1")
    D = 5 * q1 + 2 * q3 + 4 * q1 * q3 - 4 * q1 * q1 - q3 * q3 - 1
    if D == 0:  # pragma: no cover - excluded on the region
        raise VerificationError("inverse map denominator vanished")
    alpha = hv / D
    theta = -(8 * q1 + 5 * q3 + 4 * q1 * q3 - 4 * q1 * q1 - q3 * q3 - 4) / D
    params = ParamsAT(alpha, theta)
    l1, _, l3 = k3_law_at(params)
    if (l1, l3) != (q1, q3):
        raise VerificationError("inverse map failed to round-trip")
    return params


def dual_params(params: ParamsAT) -> ParamsAT:
    """The main-regime pair whose K_3 law is ``params``' law with q1 and q3 swapped."""
    if params.regime != MAIN:
        raise DomainError("dual parameters are defined for the main regime only")
    m = params.ray
    theta_star = dual_theta(m, params.theta)
    out = ParamsAT(m * (1 + theta_star), theta_star)
    a, b = k3_law_at(params), k3_law_at(out)
    if (a[0], a[1], a[2]) != (b[2], b[1], b[0]):
        raise VerificationError("dual parameters do not swap q1 and q3")
    return out


def dirichlet_ray_law(m: int, alpha) -> tuple[Fraction, Fraction, Fraction]:
    """K_3 law of (alpha, -m alpha): sampling from a symmetric Dirichlet on m atoms."""
    alpha = as_fraction(alpha)
    if alpha >= 0:
        raise DomainError("the Dirichlet ray needs alpha < 0")
    return k3_law_at(ParamsAT(alpha, -m * alpha))
