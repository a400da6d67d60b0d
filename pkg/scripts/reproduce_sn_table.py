"""Recompute the extreme-point counts of the finite-m K_3 regions and compare
them with the published table."""
import argparse
import time

from exkn.eppf import PUBLISHED_HULL_COUNTS, hull_count_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-min", type=int, default=3)
    ap.add_argument("--m-max", type=int, default=41)
    args = ap.parse_args()

    start = time.perf_counter()
    table = hull_count_table(args.m_min, args.m_max)
    bad = 0
    for m, s in table.items():
        ref = PUBLISHED_HULL_COUNTS.get(m)
        flag = "" if ref in (None, s) else f"  MISMATCH (published {ref})"
        bad += bool(flag)
        print(f"m={m:3d}  s_m={s:3d}{flag}")
    print(f"{len(table)} levels, {bad} mismatches, {time.perf_counter() - start:.1f}s")
    raise SystemExit(4 if bad else 0)


if __name__ == "__main__":
    main()
