"""Noisy step image: Weibull (beta 2, 3) vs Sobel at a matched percentile threshold.

    python scripts/noise_comparison.py --out runs/noise --seed 0 --noise-sigma 10
"""
import argparse

from weibull_edges.experiments import format_table, noise_comparison


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default="runs/noise_comparison")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--noise-sigma", type=float, default=10.0)
    ap.add_argument("--percentile", type=float, default=90.0)
    args = ap.parse_args()
    rows = noise_comparison(args.out, args.seed, args.noise_sigma, args.percentile)
    print(format_table(rows), end="")
    print(f"wrote {args.out}/table.json and table.md")


if __name__ == "__main__":
    main()
