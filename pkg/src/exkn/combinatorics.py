"""Integer partitions, Stirling numbers and set-partition counts."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial

from .errors import DomainError

Partition = tuple  # tuple[int, ...], non-increasing, positive parts

MAX_STIRLING_N = 200
MAX_PARTITION_N = 60


def as_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts)
    if not lam:
        raise DomainError("a partition needs at least one part")
    if any(p < 1 for p in lam):
        raise DomainError(f"partition parts must be positive: {lam}")
    return tuple(sorted(lam, reverse=True))


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = k * (prev[k] if k < len(prev) else 0) + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    if not 0 <= n <= MAX_STIRLING_N:
        raise DomainError(f"stirling2 supports 0 <= n <= {MAX_STIRLING_N}, got n={n}")
    if not 0 <= k <= n:
        raise DomainError(f"stirling2 needs 0 <= k <= n, got k={k}, n={n}")
    # build rows bottom-up so the cache never recurses deeply
    for i in range(n + 1):
        _stirling_row(i)
    return _stirling_row(n)[k]


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def falling_factorial(m: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= m - i
        if out == 0:
            break
    return out


def rising_factorial(x, k: int):
    """x (x+1) ... (x+k-1); works for any numeric type supporting + and *."""
    out = 1
    for i in range(k):
        out = out * (x + i)
    return out


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(_partitions(n, n))


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first and (1^n) last."""
    if not 1 <= n <= MAX_PARTITION_N:
        raise DomainError(f"partitions_of supports 1 <= n <= {MAX_PARTITION_N}, got {n}")
    return _partitions_cached(n)


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


@lru_cache(maxsize=1 << 16)
def cluster_count(lam: Partition) -> int:
    """Number of set partitions of [n] whose block sizes are ``lam``.

    n! / prod_j (j!)^{s_j} s_j!  where s_j is the multiplicity of part j.
    """
    n = sum(lam)
    denom = 1
    for j, s in Counter(lam).items():
        denom *= factorial(j) ** s * factorial(s)
    return factorial(n) // denom


def binomial_gap_bounds(a, b, n: int):
    """The three sides of 4((n-1)/n) ab (a+b)^(n-2) <= (a+b)^n - a^n - b^n <= n ab (a+b)^(n-2)."""
    lower = 4 * (n - 1) * a * b * (a + b) ** (n - 2) / n
    middle = (a + b) ** n - a**n - b**n
    upper = n * a * b * (a + b) ** (n - 2)
    return lower, middle, upper


__all__ = [
    "Partition",
    "as_partition",
    "stirling2",
    "bell",
    "falling_factorial",
    "rising_factorial",
    "partitions_of",
    "multiplicities",
    "cluster_count",
    "binomial_gap_bounds",
]
