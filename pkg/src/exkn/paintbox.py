"""Laws of K_n under i.i.d. sampling from a ranked discrete distribution."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import as_partition, cluster_count, partitions_of
from .errors import DomainError, VerificationError
from .exact_geom import as_fraction

MAX_LEVEL = 12
MAX_ATOMS = 16

INF = math.inf


@dataclass(frozen=True)
class RankedDiscreteDistribution:
    """Atom weights in non-increasing order; the missing mass is non-atomic dust.

    Weights are sorted and zero atoms dropped on construction.
    """

    atoms: tuple = ()

    def __post_init__(self):
        atoms = [as_fraction(a) for a in self.atoms]
        if any(a < 0 for a in atoms):
            raise DomainError("atom weights must be nonnegative")
        atoms = tuple(sorted((a for a in atoms if a), reverse=True))
        if sum(atoms) > 1:
            raise DomainError("atom weights sum to more than 1")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def uniform(cls, m: int) -> RankedDiscreteDistribution:
        if m == INF:
            return cls(())
        if m < 1:
            raise DomainError("uniform distribution needs m >= 1")
        return cls((Fraction(1, m),) * m)

    @property
    def dust(self) -> Fraction:
        return 1 - sum(self.atoms, Fraction(0))

    def __len__(self):
        return len(self.atoms)

    def power_sum(self, k: int) -> Fraction:
        return sum((a**k for a in self.atoms), Fraction(0))


def uniform(m) -> RankedDiscreteDistribution:
    return RankedDiscreteDistribution.uniform(m)


class LawOfK(tuple):
    """(P(K_n = 1), ..., P(K_n = n)) as exact rationals summing to one.

    Indexing is the plain tuple's (0-based); ``law.at(k)`` is 1-based.
    """

    def __new__(cls, probs):
        probs = tuple(as_fraction(p) for p in probs)
        if not probs:
            raise DomainError("a law of K_n needs n >= 1 entries")
        if any(p < 0 or p > 1 for p in probs):
            raise DomainError("law entries must lie in [0, 1]")
        if sum(probs) != 1:
            raise DomainError(f"law entries sum to {sum(probs)}, not 1")
        return super().__new__(cls, probs)

    @property
    def n(self) -> int:
        return len(self)

    def at(self, k: int) -> Fraction:
        return self[k - 1]


def _check_size(p: RankedDiscreteDistribution, n: int):
    if not 1 <= n <= MAX_LEVEL:
        raise DomainError(f"level must be in 1..{MAX_LEVEL}, got {n}")
    if len(p.atoms) > MAX_ATOMS:
        raise DomainError(f"at most {MAX_ATOMS} atoms supported, got {len(p.atoms)}")


def _injective_sum(atoms: tuple, dust: Fraction, lam: tuple) -> Fraction:
    # Sum over injective maps of the (labelled) blocks to atoms, with leftover
    # singleton blocks sent to dust. Atoms are scanned in order; the state is
    # the multiset of block sizes still unplaced.
    M = len(atoms)

    @lru_cache(maxsize=None)
    def go(i: int, rest: tuple) -> Fraction:
        if not rest:
            return Fraction(1)
        if i == M:
            if rest[0] == 1:
                return dust ** len(rest)
            return Fraction(0)
        total = go(i + 1, rest)
        a = atoms[i]
        seen = set()
        for idx, j in enumerate(rest):
            if j in seen:
                continue
            seen.add(j)
            mult = rest.count(j)
            total += mult * a**j * go(i + 1, rest[:idx] + rest[idx + 1 :])
        return total

    return go(0, lam)


def paintbox_eppf(p: RankedDiscreteDistribution, lam) -> Fraction:
    """Probability that i.i.d. sampling from ``p`` induces one fixed set partition
    of [n] with block sizes ``lam``."""
    lam = as_partition(lam)
    _check_size(p, sum(lam))
    return _injective_sum(p.atoms, p.dust, lam)


def law_of_kn(p: RankedDiscreteDistribution, n: int) -> LawOfK:
    _check_size(p, n)
    probs = [Fraction(0)] * n
    for lam in partitions_of(n):
        w = _injective_sum(p.atoms, p.dust, lam)
        if w:
            probs[len(lam) - 1] += cluster_count(lam) * w
    if sum(probs) != 1:
        raise VerificationError("law of K_n does not sum to 1")
    return LawOfK(probs)


def q3_closed(p: RankedDiscreteDistribution) -> tuple[Fraction, Fraction, Fraction]:
    """Law of K_3 from power sums of the atoms."""
    s2, s3 = p.power_sum(2), p.power_sum(3)
    return s3, 3 * s2 - 3 * s3, 1 - 3 * s2 + 2 * s3


def q_n2(p: RankedDiscreteDistribution, n: int) -> Fraction:
    """P(K_n = 2)."""
    return law_of_kn(p, n)[1]


def merge_two_smallest(p: RankedDiscreteDistribution) -> RankedDiscreteDistribution:
    if len(p.atoms) < 2:
        raise DomainError("merging needs at least two nonzero atoms")
    *rest, a, b = p.atoms
    return RankedDiscreteDistribution((*rest, a + b))


def with_dust_as_atom(p: RankedDiscreteDistribution) -> RankedDiscreteDistribution:
    """Replace the non-atomic mass by a single atom of the same weight."""
    return RankedDiscreteDistribution((*p.atoms, p.dust))


def f_coeff(N: int) -> Fraction:
    """3N(N+1)/(2N+1), the cubic coefficient of the N-th segment functional."""
    if N < 1:
        raise DomainError("N must be >= 1")
    return Fraction(3 * N * (N + 1), 2 * N + 1)


def l_n_functional(p: RankedDiscreteDistribution, N: int) -> Fraction:
    """q3 + (N-1)(3N+2)/(2N+1) q1, written as 1 - 3 sum p^2 + f(N) sum p^3."""
    return 1 - 3 * p.power_sum(2) + f_coeff(N) * p.power_sum(3)


def merge_delta(a, b, N: int) -> Fraction:
    """Change of the N-th segment functional when atoms ``a`` and ``b`` are merged."""
    a, b = as_fraction(a), as_fraction(b)
    return 3 * a * b * ((a + b) * f_coeff(N) - 2)


def khintchine_decompose(p: RankedDiscreteDistribution) -> dict:
    """Weights w with p = sum_m w[m] u_m + w[inf] u_inf.

    The finite weights are m (p_m - p_{m+1}); zero weights are omitted.
    """
    atoms = p.atoms
    weights = {}
    for m in range(1, len(atoms) + 1):
        nxt = atoms[m] if m < len(atoms) else Fraction(0)
        w = m * (atoms[m - 1] - nxt)
        if w:
            weights[m] = w
    if p.dust:
        weights[INF] = p.dust
    return weights


def mixture_of_uniforms(weights: dict) -> tuple:
    """Coordinates of sum_m w[m] u_m (the u_inf term contributes no atoms)."""
    finite = {m: as_fraction(w) for m, w in weights.items() if m != INF}
    if not finite:
        return ()
    top = max(finite)
    return tuple(
        sum((w / m for m, w in finite.items() if m >= i), Fraction(0))
        for i in range(1, top + 1)
    )
