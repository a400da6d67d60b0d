"""Seeded Monte Carlo runs of the three samplers against their exact laws."""
import argparse
from dataclasses import dataclass
from fractions import Fraction

from exkn.paintbox import RankedDiscreteDistribution, uniform
from exkn.sampler import sample_crp, sample_dirichlet_uniform, sample_paintbox
from exkn.two_param import ParamsAT


@dataclass
class Config:
    reps: int = 100_000
    seed: int = 20240601
    workers: int | None = None


def runs(cfg):
    yield "crp (0, 1) n=3", sample_crp(ParamsAT(0, 1), 3, cfg.reps, cfg.seed, cfg.workers)
    yield "crp (1/2, 1/2) n=3", sample_crp(ParamsAT(Fraction(1, 2), Fraction(1, 2)), 3, cfg.reps, cfg.seed, cfg.workers)
    yield "paintbox u_3 n=3", sample_paintbox(uniform(3), 3, cfg.reps, cfg.seed + 1, cfg.workers)
    p = RankedDiscreteDistribution((Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)))
    yield "paintbox (1/2,1/3,1/6) n=4", sample_paintbox(p, 4, cfg.reps, cfg.seed, cfg.workers)
    yield "dirichlet m=2 a=1 n=3", sample_dirichlet_uniform(2, 1, 3, cfg.reps, cfg.seed, cfg.workers)
    yield "dirichlet m=3 a=1000 n=3", sample_dirichlet_uniform(3, 1000, 3, cfg.reps, cfg.seed, cfg.workers)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--reps", type=int, default=Config.reps)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--workers", type=int, default=None)
    cfg = Config(**vars(ap.parse_args()))
    for name, rep in runs(cfg):
        dev = float(rep.max_abs_deviation)
        print(f"{name:30s} max|dev|={dev:.5f}  sigma<={float(rep.sigma_bound):.5f}  within 4 sigma: {rep.within(4)}")


if __name__ == "__main__":
    main()
