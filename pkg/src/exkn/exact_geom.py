"""Exact rational geometry: 2D hulls, LP feasibility with certificates, and
extreme-point tests, plus arithmetic in a real quadratic field.

Everything here works over :class:`fractions.Fraction`; there is no epsilon
anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, sqrt
from typing import Sequence

from .errors import DomainError, VerificationError

Point = tuple  # tuple[Fraction, ...]

# square factors of a radicand are stripped by trial division up to this bound
SQUARE_FACTOR_BOUND = 10**4


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact inputs")
    return Fraction(x)


def as_point(coords) -> Point:
    return tuple(as_fraction(c) for c in coords)


# -- convex hull in the plane -------------------------------------------------

def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull2d(points) -> list[Point]:
    """Extreme points of the convex hull of a planar point set.

    Returned counterclockwise starting from the lexicographically smallest
    point. Points in the relative interior of a hull edge are dropped, so the
    length of the result is the number of extreme points.
    """
    pts = set()
    for p in points:
        p = as_point(p)
        if len(p) != 2:
            raise DomainError(f"hull2d needs 2D points, got dimension {len(p)}")
        pts.add(p)
    if not pts:
        raise DomainError("hull2d needs at least one point")
    pts = sorted(pts)
    if len(pts) <= 2:
        return pts

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


# -- linear programming -------------------------------------------------------

@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`lp_feasible`.

    Exactly one of ``x`` (a nonnegative solution of ``A x = b``) and
    ``certificate`` (a ``y`` with ``y^T A <= 0`` and ``y^T b > 0``) is set.
    """

    feasible: bool
    x: tuple | None = None
    certificate: tuple | None = None
    pivots: int = 0

    def __bool__(self) -> bool:
        return self.feasible


def lp_feasible(A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Decide whether ``A x = b, x >= 0`` has a solution.

    Phase-one primal simplex with Bland's rule in exact arithmetic. The
    returned witness or Farkas certificate is re-checked before returning.
    """
    A = [[as_fraction(v) for v in row] for row in A]
    b = [as_fraction(v) for v in b]
    m = len(A)
    if len(b) != m:
        raise DomainError(f"A has {m} rows but b has {len(b)} entries")
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise DomainError("rows of A have inconsistent lengths")
    if m == 0:
        return LPResult(True, x=(Fraction(0),) * n)

    signs = [(-1 if bi < 0 else 1) for bi in b]
    width = n + m + 1
    zero = Fraction(0)
    T = []
    for i in range(m):
        s = signs[i]
        row = [s * v for v in A[i]] + [zero] * m + [s * b[i]]
        row[n + i] = Fraction(1)
        T.append(row)
    # reduced costs of the phase-one objective (sum of artificials); last
    # entry carries minus the objective value
    cost = [zero] * width
    for row in T:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    basis = [n + i for i in range(m)]

    pivots = 0
    while True:
        entering = next((j for j in range(n) if cost[j] < 0), None)
        if entering is None:
            break
        leave, best = None, None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # pragma: no cover - phase one is bounded below by 0
            raise VerificationError("phase-one LP reported unbounded")
        _pivot(T, cost, leave, entering)
        basis[leave] = entering
        pivots += 1

    if cost[-1] == 0:
        x = [zero] * n
        for i, j in enumerate(basis):
            if j < n:
                x[j] = T[i][-1]
        x = tuple(x)
        for row, bi in zip(A, b):
            if sum(r * xj for r, xj in zip(row, x) if xj) != bi:
                raise VerificationError("LP witness failed re-substitution")
        if any(xj < 0 for xj in x):
            raise VerificationError("LP witness has a negative entry")
        return LPResult(True, x=x, pivots=pivots)

    # dual values of the phase-one problem read off the inverse basis
    y = []
    for i in range(m):
        yi = sum((T[r][n + i] for r, j in enumerate(basis) if j >= n), zero)
        y.append(signs[i] * yi)
    y = tuple(y)
    for j in range(n):
        if sum(y[i] * A[i][j] for i in range(m)) > 0:
            raise VerificationError("Farkas certificate violates y^T A <= 0")
    if sum(yi * bi for yi, bi in zip(y, b)) <= 0:
        raise VerificationError("Farkas certificate violates y^T b > 0")
    return LPResult(False, certificate=y, pivots=pivots)


def _pivot(T, cost, r, c):
    prow = T[r]
    inv = 1 / prow[c]
    prow[:] = [v * inv for v in prow]
    nz = [j for j, v in enumerate(prow) if v]
    for row in (*T, cost):
        if row is prow:
            continue
        f = row[c]
        if f:
            for j in nz:
                row[j] -= f * prow[j]


def convex_combination(x, generators) -> LPResult:
    """LP for ``x = sum w_i g_i`` with ``w >= 0`` and ``sum w_i = 1``."""
    x = as_point(x)
    gens = [as_point(g) for g in generators]
    d = len(x)
    if any(len(g) != d for g in gens):
        raise DomainError("all points must share one dimension")
    A = [[g[k] for g in gens] for k in range(d)]
    A.append([Fraction(1)] * len(gens))
    return lp_feasible(A, list(x) + [Fraction(1)])


def is_extreme_point(x, others) -> bool:
    """True iff ``x`` is not a convex combination of the points in ``others``."""
    others = list(others)
    if not others:
        return True
    return not convex_combination(x, others).feasible


# -- quadratic fields ---------------------------------------------------------

def _strip_squares(r: int) -> tuple[int, int]:
    """Write the nonnegative integer ``r`` as ``s*s*core``; returns (s, core)."""
    if r == 0:
        return 0, 0
    s = 1
    f = 2
    while f <= SQUARE_FACTOR_BOUND and f * f <= r:
        ff = f * f
        while r % ff == 0:
            r //= ff
            s *= f
        f += 1
    root = isqrt(r)
    if root * root == r:
        return s * root, 1
    return s, r


class QuadraticNumber:
    """An exact number ``a + b*sqrt(d)`` with rational ``a``, ``b`` and ``d >= 0``.

    The radicand is normalized to a squarefree-looking integer (square factors
    below ``SQUARE_FACTOR_BOUND`` removed; perfect squares folded into ``a``),
    so equality is decided by comparing coordinates. Numbers over different
    radicands only mix when one of them is rational.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=0):
        a, b, d = as_fraction(a), as_fraction(b), as_fraction(d)
        if d < 0:
            raise DomainError("radicand must be nonnegative")
        # sqrt(p/q) = sqrt(p*q)/q
        s, core = _strip_squares(d.numerator * d.denominator)
        b = b * s / d.denominator
        if core <= 1 or b == 0:
            a, b, core = a + b * core, Fraction(0), 0
        self.a, self.b, self.d = a, b, core

    @classmethod
    def _raw(cls, a, b, d):
        obj = cls.__new__(cls)
        if b == 0:
            d = 0
        obj.a, obj.b, obj.d = a, b, d
        return obj

    @classmethod
    def sqrt(cls, d) -> QuadraticNumber:
        return cls(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if self.d and other.d and self.d != other.d:
                raise DomainError(
                    f"cannot combine sqrt({self.d}) and sqrt({other.d}) elements"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber._raw(Fraction(other), Fraction(0), 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber._raw(self.a + o.a, self.b + o.b, self.d or o.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber._raw(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.d or o.d
        return QuadraticNumber._raw(
            self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber._raw(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        num = self * o.conjugate()
        return QuadraticNumber._raw(num.a / nrm, num.b / nrm, num.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QuadraticNumber._raw(Fraction(1), Fraction(0), 0)
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        lhs, rhs = self.a * self.a, self.b * self.b * self.d
        return sa if lhs > rhs else sb

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadraticNumber):
            return self.a == other.a and self.b == other.b and (self.b == 0 or self.d == other.d)
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * sqrt(self.d)

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*sqrt({self.d})"
