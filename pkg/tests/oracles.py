"""Independent brute-force references used to freeze expected values.

Nothing here imports the package's algorithms; only plain enumeration.
"""
from fractions import Fraction
from itertools import product


def set_partitions(n):
    """All set partitions of {0..n-1}, as lists of blocks (restricted growth strings)."""
    def grow(i, labels, k):
        if i == n:
            blocks = [[] for _ in range(k)]
            for idx, lab in enumerate(labels):
                blocks[lab].append(idx)
            yield blocks
            return
        for lab in range(k + 1):
            labels.append(lab)
            yield from grow(i + 1, labels, max(k, lab + 1))
            labels.pop()

    if n == 0:
        yield []
        return
    yield from grow(0, [], 0)


def brute_law(atoms, dust, n):
    """Law of K_n by enumerating every outcome sequence over atoms + a dust symbol."""
    atoms = [Fraction(a) for a in atoms]
    symbols = list(range(len(atoms))) + (["dust"] if dust else [])
    weights = atoms + ([Fraction(dust)] if dust else [])
    law = [Fraction(0)] * n
    for seq in product(range(len(symbols)), repeat=n):
        w = Fraction(1)
        for s in seq:
            w *= weights[s]
        if not w:
            continue
        distinct_atoms = {s for s in seq if symbols[s] != "dust"}
        dust_draws = sum(1 for s in seq if symbols[s] == "dust")
        law[len(distinct_atoms) + dust_draws - 1] += w
    return law


def partition_count(n):
    """p(n) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for i in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > i:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[i - g1]
            if g2 <= i:
                total += sign * p[i - g2]
            k += 1
        p[i] = total
    return p[n]


def restriction_coefficients(n, m):
    """{(k, sizes of a partition of [m]): number of set partitions of [m] with those
    block sizes whose restriction to [n] has k blocks}."""
    out = {}
    for blocks in set_partitions(m):
        sizes = tuple(sorted((len(b) for b in blocks), reverse=True))
        k = sum(1 for b in blocks if any(i < n for i in b))
        out[(k, sizes)] = out.get((k, sizes), 0) + 1
    return out


def crp_partition_probability(alpha, theta, blocks):
    """Probability that the sequential seating rule produces exactly ``blocks``."""
    alpha, theta = Fraction(alpha), Fraction(theta)
    n = sum(len(b) for b in blocks)
    where = {}
    for bi, b in enumerate(blocks):
        for x in b:
            where[x] = bi
    sizes = {}
    order = []  # block ids in order of first appearance
    prob = Fraction(1)
    for t in range(n):
        b = where[t]
        if t == 0:
            sizes[b] = 1
            order.append(b)
            continue
        if b in sizes:
            prob *= (sizes[b] - alpha) / (t + theta)
            sizes[b] += 1
        else:
            prob *= (theta + len(order) * alpha) / (t + theta)
            sizes[b] = 1
            order.append(b)
    return prob


def bell_by_enumeration(n):
    return sum(1 for _ in set_partitions(n))
