"""Write the CSV data series behind every figure into a directory."""
import argparse
import pathlib

from exkn.cli import main as cli_main
from exkn.figures import FIGURES


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="figures")
    ap.add_argument("--ids", type=int, nargs="+", default=sorted(FIGURES))
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for i in args.ids:
        path = out / f"figure{i}.csv"
        code = cli_main(["figure", "--id", str(i), "--out", str(path)])
        print(f"figure {i}: {path} (exit {code})")


if __name__ == "__main__":
    main()
