"""Membership of random paintbox laws of K_n in the hull of the truncated
vertex family. Inside is evidence; outside is inconclusive."""
import argparse
import random
from fractions import Fraction

from exkn.conjecture import hull_membership
from exkn.paintbox import RankedDiscreteDistribution, law_of_kn


def random_paintbox(rng, max_atoms):
    weights = [rng.randint(1, 30) for _ in range(rng.randint(1, max_atoms))]
    total = sum(weights)
    return RankedDiscreteDistribution(tuple(Fraction(w, total) for w in weights))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--m-max", type=int, default=40)
    ap.add_argument("--max-atoms", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for n in args.n:
        inside = sum(
            hull_membership(law_of_kn(random_paintbox(rng, args.max_atoms), n), n, args.m_max)
            for _ in range(args.trials)
        )
        print(f"EVIDENCE n={n}: {inside}/{args.trials} laws inside the truncated hull (m <= {args.m_max})")


if __name__ == "__main__":
    main()
