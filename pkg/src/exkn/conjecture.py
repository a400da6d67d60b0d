"""Laws of K_n under uniform sampling on m values and exact checks that they
are the extreme points of their hull.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import falling_factorial, stirling2
from .errors import DomainError
from .exact_geom import convex_combination, is_extreme_point
from .paintbox import INF, LawOfK

MAX_N = 12
MAX_VERIFY_N = 8
MAX_M = 60


@dataclass(frozen=True)
class VnmVector:
    n: int
    m: object  # int or INF
    law: LawOfK


def v_nm(n: int, m) -> VnmVector:
    """Law of K_n when sampling i.i.d. uniformly from m values.

    Entries are S(n,k) (m)_k / m^n; m = INF gives (0, ..., 0, 1).
    """
    if not 2 <= n <= MAX_N:
        raise DomainError(f"v_nm needs 2 <= n <= {MAX_N}, got {n}")
    if m == INF:
        return VnmVector(n, INF, LawOfK([0] * (n - 1) + [1]))
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer or INF, got {m!r}")
    denom = m**n
    law = LawOfK(Fraction(stirling2(n, k) * falling_factorial(m, k), denom) for k in range(1, n + 1))
    return VnmVector(n, m, law)


def reference_family(n: int, m_max: int) -> dict:
    """{m: v_{n,m}} for m = 1..m_max plus m = INF."""
    fam = {m: v_nm(n, m).law for m in range(1, m_max + 1)}
    fam[INF] = v_nm(n, INF).law
    return fam


def _check_bounds(n, m_max, n_lo=2, n_hi=MAX_VERIFY_N):
    if not n_lo <= n <= n_hi:
        raise DomainError(f"n must be in {n_lo}..{n_hi}, got {n}")
    if not 1 <= m_max <= MAX_M:
        raise DomainError(f"m_max must be in 1..{MAX_M}, got {m_max}")


def _extreme_job(args):
    n, m_max, m = args
    fam = reference_family(n, m_max)
    target = fam.pop(m)
    return m, is_extreme_point(target, fam.values())


def worker_count(workers=None) -> int:
    if workers is not None:
        return max(1, int(workers))
    return max(1, int(os.environ.get("EXKN_THREADS", "1")))


@dataclass
class ExtremeReport:
    n: int
    m_max: int
    verdicts: dict = field(default_factory=dict)  # m -> bool
    seconds: float = 0.0

    @property
    def non_extreme(self) -> list:
        return [m for m, ok in self.verdicts.items() if not ok]

    @property
    def all_extreme(self) -> bool:
        return not self.non_extreme

    @property
    def note(self) -> str:
        # extra points can only demote a vertex, never promote one
        if self.all_extreme:
            return f"extreme relative to the family truncated at m <= {self.m_max}"
        return "non-extreme verdicts are final"


def verify_extremes(n: int, m_max: int, workers=None) -> ExtremeReport:
    """Check every v_{n,m}, m <= m_max, against the rest of the truncated family
    (including v_{n,inf}) by exact LP."""
    _check_bounds(n, m_max)
    start = time.perf_counter()
    jobs = [(n, m_max, m) for m in range(1, m_max + 1)]
    workers = worker_count(workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_extreme_job, jobs))
    else:
        results = [_extreme_job(j) for j in jobs]
    report = ExtremeReport(n, m_max)
    for m, ok in sorted(results):
        report.verdicts[m] = ok
    report.seconds = time.perf_counter() - start
    return report


def hull_weights(law, n: int, m_max: int):
    """Convex weights over the truncated family reproducing ``law``, or None."""
    law = LawOfK(law)
    if len(law) != n:
        raise DomainError(f"law has length {len(law)}, expected {n}")
    _check_bounds(n, m_max, n_hi=MAX_N)
    fam = reference_family(n, m_max)
    res = convex_combination(law, fam.values())
    if not res.feasible:
        return None
    return {m: w for m, w in zip(fam, res.x) if w}


def hull_membership(law, n: int, m_max: int) -> bool:
    """Whether ``law`` lies in the hull of {v_{n,m} : m <= m_max} and v_{n,inf}.

    True is conclusive evidence of membership in the full hull; False only
    says the truncated family does not reach it.
    """
    return hull_weights(law, n, m_max) is not None
