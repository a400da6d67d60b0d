"""Seeded Monte Carlo estimates of the law of K_n, checked against exact laws.

Replicates are split into fixed chunks of ``CHUNK`` draws. Chunk i uses the
generator ``numpy.random.PCG64(SeedSequence(seed, spawn_key=(i,)))``, so the
result depends only on (seed, reps) and not on how chunks are spread over
workers.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .conjecture import worker_count
from .eppf import law_from_eppf
from .errors import DomainError, VerificationError
from .exact_geom import as_fraction
from .paintbox import LawOfK, RankedDiscreteDistribution, law_of_kn
from .two_param import EXCEPTIONAL, MAIN, ParamsAT, ewens_pitman_table, k3_law_at

CHUNK = 1 << 15
MAX_N = 20
MAX_REPS = 10**7
GENERATOR = "numpy.random.PCG64 via SeedSequence(seed, spawn_key=(chunk,)), chunk=32768"


@dataclass(frozen=True)
class SampleReport:
    n: int
    reps: int
    seed: int
    empirical: tuple  # Fractions, counts / reps
    exact: LawOfK
    max_abs_deviation: Fraction
    sigma_bound: Fraction  # largest per-cell standard error, rounded up
    generator: str = GENERATOR

    def cell_sigma(self, k: int) -> float:
        p = self.exact.at(k)
        return math.sqrt(p * (1 - p) / self.reps)

    def within(self, z=4) -> bool:
        """Every cell satisfies |emp - p| <= z sqrt(p (1-p) / reps), decided exactly."""
        z = as_fraction(z)
        for e, p in zip(self.empirical, self.exact):
            dev = e - p
            if dev * dev * self.reps > z * z * p * (1 - p):
                return False
        return True


def _check(n, reps):
    if not 1 <= n <= MAX_N:
        raise DomainError(f"n must be in 1..{MAX_N}")
    if not 1 <= reps <= MAX_REPS:
        raise DomainError(f"reps must be in 1..{MAX_REPS}")


def _chunk_rng(seed: int, i: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(i,))))


def _run_chunks(kernel, n, reps, seed, workers):
    sizes = [min(CHUNK, reps - s) for s in range(0, reps, CHUNK)]

    def job(i):
        ks = kernel(_chunk_rng(seed, i), sizes[i])
        return np.bincount(ks, minlength=n + 1)[1 : n + 1]

    w = worker_count(workers)
    if w > 1:
        with ThreadPoolExecutor(max_workers=w) as pool:
            parts = list(pool.map(job, range(len(sizes))))
    else:
        parts = [job(i) for i in range(len(sizes))]
    counts = np.sum(parts, axis=0)
    return [int(c) for c in counts]


def _report(n, reps, seed, counts, exact) -> SampleReport:
    emp = tuple(Fraction(c, reps) for c in counts)
    if sum(emp) != 1:
        raise VerificationError("empirical law does not sum to 1")
    dev = max(abs(e - p) for e, p in zip(emp, exact))
    sig = max(math.sqrt(p * (1 - p) / reps) for p in exact)
    sigma_bound = Fraction(math.nextafter(sig, math.inf)) if sig else Fraction(0)
    return SampleReport(n, reps, seed, emp, exact, dev, sigma_bound)


def _distinct_counts(labels: np.ndarray, fresh: np.ndarray | None = None) -> np.ndarray:
    """Number of distinct labels per row; entries flagged ``fresh`` always count."""
    s = np.sort(labels, axis=1)
    k = 1 + np.count_nonzero(s[:, 1:] != s[:, :-1], axis=1)
    if fresh is not None:
        # fresh entries were given label -1; drop that group and count each one
        nf = fresh.sum(axis=1)
        k = k - (nf > 0) + nf
    return k


def sample_crp(params: ParamsAT, n: int, reps: int, seed: int, workers=None) -> SampleReport:
    """Chinese restaurant process: customer t+1 joins block i with probability
    (|C_i| - alpha)/(t + theta) or opens a new block with (theta + k alpha)/(t + theta)."""
    _check(n, reps)
    if params.regime not in (MAIN, EXCEPTIONAL):  # pragma: no cover - ParamsAT validates
        raise DomainError("invalid parameters")
    a, t = params.alpha, params.theta
    for step in range(1, n):
        for k in range(1, step + 1):
            # block weights total step - k alpha, new-block weight theta + k alpha
            if (step - k * a) + (t + k * a) != step + t:  # pragma: no cover
                raise VerificationError("CRP weights do not sum to one")
    af, tf = float(a), float(t)

    def kernel(rng, size):
        sizes = np.zeros((size, n), dtype=np.int64)
        sizes[:, 0] = 1
        k = np.ones(size, dtype=np.int64)
        for step in range(1, n):
            w = np.where(sizes > 0, sizes - af, 0.0)
            u = rng.random(size) * (step + tf)
            cum = np.cumsum(w, axis=1)
            hit = cum > u[:, None]
            joins = hit.any(axis=1)
            idx = np.where(joins, hit.argmax(axis=1), k)
            sizes[np.arange(size), idx] += 1
            k = k + ~joins
        return k

    counts = _run_chunks(kernel, n, reps, seed, workers)
    exact = law_from_eppf(ewens_pitman_table(params, n), n)
    return _report(n, reps, seed, counts, exact)


def sample_paintbox(p: RankedDiscreteDistribution, n: int, reps: int, seed: int, workers=None) -> SampleReport:
    """i.i.d. draws from the atoms, or a fresh value with the dust probability."""
    _check(n, reps)
    exact = law_of_kn(p, n)
    probs = np.array([float(a) for a in p.atoms] + [float(p.dust)])
    probs = probs / probs.sum()
    dust_label = len(p.atoms)

    def kernel(rng, size):
        labels = rng.choice(len(probs), size=(size, n), p=probs)
        fresh = labels == dust_label
        labels = np.where(fresh, -1, labels)
        return _distinct_counts(labels, fresh)

    counts = _run_chunks(kernel, n, reps, seed, workers)
    return _report(n, reps, seed, counts, exact)


def sample_dirichlet_uniform(m: int, neg_alpha, n: int, reps: int, seed: int, workers=None) -> SampleReport:
    """Weights from a symmetric Dirichlet(neg_alpha, ..., neg_alpha) on m atoms, then
    n i.i.d. categorical draws."""
    _check(n, reps)
    if m < 1:
        raise DomainError("m must be >= 1")
    neg_alpha = as_fraction(neg_alpha)
    if neg_alpha <= 0:
        raise DomainError("neg_alpha must be positive")
    conc = float(neg_alpha)

    def kernel(rng, size):
        if m == 1:
            return np.ones(size, dtype=np.int64)
        w = rng.dirichlet([conc] * m, size=size)
        cum = np.cumsum(w, axis=1)
        u = rng.random((size, n))
        labels = (u[:, :, None] >= cum[:, None, :-1]).sum(axis=2)
        return _distinct_counts(labels)

    counts = _run_chunks(kernel, n, reps, seed, workers)
    params = ParamsAT(-neg_alpha, m * neg_alpha)
    if n == 3:
        exact = LawOfK(k3_law_at(params))
    else:
        exact = law_from_eppf(ewens_pitman_table(params, n), n)
    return _report(n, reps, seed, counts, exact)
