"""Exact extreme-point check of the Stirling vertex family v_{n,m}."""
import argparse

from exkn.conjecture import verify_extremes


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--m-max", type=int, default=30)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    ok = True
    for n in range(3, args.n_max + 1):
        rep = verify_extremes(n, args.m_max, workers=args.workers)
        ok &= rep.all_extreme
        status = "all extreme" if rep.all_extreme else f"non-extreme: {rep.non_extreme}"
        print(f"n={n}  m<={args.m_max}  {status}  ({rep.seconds:.2f}s)")
    print(rep.note)
    raise SystemExit(0 if ok else 4)


if __name__ == "__main__":
    main()
