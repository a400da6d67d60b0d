"""Finite exchangeable partitions: EPPF tables, coefficient expansion through the
consistency relation, and the achievable (q1, q3) sets for K_3 of a random
partition of [m].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .combinatorics import as_partition, cluster_count, partitions_of
from .errors import DomainError, VerificationError
from .exact_geom import as_fraction, hull2d
from .k3_region import K3Point
from .paintbox import LawOfK

MAX_LEVEL = 45

# published vertex counts of the achievable K_3 region for partitions of [m]
PUBLISHED_HULL_COUNTS = {
    3: 3, 4: 3, 5: 4, 6: 4, 7: 5, 8: 5, 9: 6, 10: 6, 11: 7, 12: 6, 13: 8,
    14: 7, 15: 8, 16: 8, 17: 9, 18: 8, 19: 10, 20: 9, 21: 10, 22: 10, 23: 11,
    24: 9, 25: 12, 26: 11, 27: 11, 28: 11, 29: 13, 30: 11, 31: 13, 32: 12,
    33: 13, 34: 13, 35: 14, 36: 12, 37: 15, 38: 14, 39: 14, 40: 13, 41: 16,
}


@dataclass(frozen=True)
class CoefficientMatrix:
    """P(K_n = k) = sum over partitions lam of m of rows[k][lam] * p(lam)."""

    n: int
    m: int
    rows: dict  # k -> {partition: int}

    def entry(self, k: int, lam) -> int:
        return self.rows.get(k, {}).get(as_partition(lam), 0)


def _check_levels(n, m, n_lo=1):
    if not n_lo <= n <= m <= MAX_LEVEL:
        raise DomainError(f"need {n_lo} <= n <= m <= {MAX_LEVEL}, got n={n}, m={m}")


def base_coefficients(n: int, ks=None) -> CoefficientMatrix:
    rows = {k: {} for k in (ks or range(1, n + 1))}
    for lam in partitions_of(n):
        k = len(lam)
        if k in rows:
            rows[k][lam] = cluster_count(lam)
    return CoefficientMatrix(n, n, rows)


def expand_once(mat: CoefficientMatrix) -> CoefficientMatrix:
    """Rewrite every p(mu) at level l via p(mu) = p(mu, 1) + sum_i p(mu + e_i)."""
    new_rows = {}
    for k, row in mat.rows.items():
        out: dict = {}
        get = out.get
        for mu, c in row.items():
            key = mu + (1,)
            out[key] = get(key, 0) + c
            prev = None
            for idx, j in enumerate(mu):
                if j == prev:
                    continue
                prev = j
                s = mu.count(j)
                key = mu[:idx] + (j + 1,) + mu[idx + 1 :]
                out[key] = get(key, 0) + c * s
        new_rows[k] = out
    return CoefficientMatrix(mat.n, mat.m + 1, new_rows)


def iter_coefficients(n: int, m_max: int, ks=None):
    """Yield the coefficient matrices at levels n, n+1, ..., m_max."""
    _check_levels(n, m_max)
    mat = base_coefficients(n, ks)
    yield mat
    while mat.m < m_max:
        mat = expand_once(mat)
        yield mat


def _expand(n: int, m: int, ks=None) -> CoefficientMatrix:
    for mat in iter_coefficients(n, m, ks):
        pass
    return mat


def expand_coefficients(n: int, m: int, ks=None) -> CoefficientMatrix:
    if n < 3:
        raise DomainError(f"expand_coefficients needs n >= 3, got {n}")
    return _expand(n, m, ks)


@dataclass(frozen=True)
class EppfTable:
    """EPPF values at level m, keyed by partitions of m (missing keys are 0)."""

    m: int
    values: dict

    def __post_init__(self):
        vals = {as_partition(k): as_fraction(v) for k, v in self.values.items()}
        object.__setattr__(self, "values", vals)

    def validate(self):
        total = Fraction(0)
        for lam, v in self.values.items():
            if sum(lam) != self.m:
                raise DomainError(f"partition {lam} is not a partition of {self.m}")
            if v < 0:
                raise DomainError(f"negative EPPF value at {lam}")
            total += cluster_count(lam) * v
        if total != 1:
            raise DomainError(f"EPPF table is not normalized (total {total})")

    def __getitem__(self, lam) -> Fraction:
        return self.values.get(as_partition(lam), Fraction(0))

    @classmethod
    def from_function(cls, m: int, fn) -> EppfTable:
        return cls(m, {lam: fn(lam) for lam in partitions_of(m)})


def law_from_eppf(table: EppfTable, n: int) -> LawOfK:
    """Law of K_n for the restriction to [n] of a random partition of [table.m]."""
    table.validate()
    if not 1 <= n <= table.m:
        raise DomainError(f"need 1 <= n <= {table.m}, got {n}")
    mat = _expand(n, table.m)
    probs = []
    for k in range(1, n + 1):
        row = mat.rows.get(k, {})
        probs.append(sum((c * table[lam] for lam, c in row.items()), Fraction(0)))
    if sum(probs) != 1:
        raise VerificationError("law from EPPF does not sum to 1")
    return LawOfK(probs)


def region_points(mat: CoefficientMatrix) -> set:
    """{(A(lam)/C(lam), B(lam)/C(lam))} from the k = 1 and k = 3 rows."""
    if mat.n != 3:
        raise DomainError("region points need a K_3 coefficient matrix")
    A, B = mat.rows[1], mat.rows[3]
    pts = set()
    for lam in partitions_of(mat.m):
        c = cluster_count(lam)
        pts.add(K3Point(Fraction(A.get(lam, 0), c), Fraction(B.get(lam, 0), c)))
    return pts


def achievable_k3_region(m: int) -> tuple[set, int]:
    """Generating points of the achievable (q1, q3) set for K_3 of a random
    partition of [m], and the number of extreme points of their hull."""
    _check_levels(3, m)
    pts = region_points(expand_coefficients(3, m, ks=(1, 3)))
    return pts, len(hull2d(pts))


def iter_region_hulls(m_min: int, m_max: int):
    """Yield (m, hull vertices) for m_min <= m <= m_max in one expansion pass."""
    _check_levels(3, m_max)
    if m_min < 3:
        raise DomainError("m_min must be >= 3")
    for mat in iter_coefficients(3, m_max, ks=(1, 3)):
        if mat.m >= m_min:
            yield mat.m, hull2d(region_points(mat))


def hull_count_table(m_min: int, m_max: int) -> dict:
    return {m: len(h) for m, h in iter_region_hulls(m_min, m_max)}


def sharp_bound_detail(n: int) -> tuple[Fraction, tuple]:
    """max over lam |- n+1 of (coefficient of p(lam) in P(K_n = n-1)) / C(lam).

    Maximizing a nonnegative linear form over {p >= 0 : sum C(lam) p(lam) = 1}
    is attained at a single partition, so the LP reduces to this ratio.
    """
    if not 3 <= n <= 20:
        raise DomainError(f"sharp_bound_kn needs 3 <= n <= 20, got {n}")
    mat = _expand(n, n + 1, ks=(n - 1,))
    best, arg = Fraction(-1), None
    for lam in partitions_of(n + 1):
        r = Fraction(mat.rows[n - 1].get(lam, 0), cluster_count(lam))
        if r > best:
            best, arg = r, lam
    return best, arg


def sharp_bound_kn(n: int) -> Fraction:
    return sharp_bound_detail(n)[0]


def sharp_bound_ratios(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three candidate ratios for p(3,1^{n-2}), p(2,2,1^{n-3}), p(2,1^{n-1})."""
    c2 = comb(n, 2)
    return (
        Fraction(c2, c2 + comb(n, 3)),
        Fraction(c2 * (n - 2), c2 * (n - 2) + 3 * comb(n, 4)),
        Fraction(c2, c2 + n),
    )


def eppf_for_target_law(a) -> EppfTable:
    """An EPPF at level n = len(a) whose K_n law is exactly ``a``.

    Mass a_k sits on the hook partition (n-k+1, 1^{k-1}).
    """
    a = LawOfK(a)
    n = len(a)
    values = {}
    for k in range(1, n + 1):
        hook = as_partition((n - k + 1,) + (1,) * (k - 1))
        values[hook] = a.at(k) / cluster_count(hook)
    return EppfTable(n, values)
