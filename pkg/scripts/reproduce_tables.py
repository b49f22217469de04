#!/usr/bin/env python3
"""Print the closed-form operation-count tables next to the published rows."""
import argparse
import sys

from middlepath import analytics


def show(title, reports, published, key):
    print(title)
    print(f"{'':>8} {'comp':>9} {'arith':>9} {'total':>9} {'impr%':>9}   published")
    for r in reports:
        pub = published.get(getattr(r, key))
        vals = " ".join(f"{v:9.4f}" for v in r.values())
        flag = "  *" if r.deviation_note else ""
        print(f"{getattr(r, key):>8} {vals}   {'/'.join(pub) if pub else '-'}{flag}")
    print()


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--csv-dir", help="also write matrix_sweep.csv and n_sweep.csv here")
    args = p.parse_args()

    sizes = analytics.sweep_matrix_sizes(analytics.DEFAULT_SIZES, 10)
    nvals = analytics.sweep_n_values(100, analytics.DEFAULT_N_VALUES)
    show("matrix-size sweep, N=10", sizes, analytics.PUBLISHED_SIZE_SWEEP, "m")
    show("N sweep, 100 x 100", nvals, analytics.PUBLISHED_N_SWEEP, "n_step")
    print("* published row disagrees with the closed form beyond 0.01 / 0.02 points")
    saving = analytics.estimate_pipeline_saving(analytics.SavingsModel())
    print(f"pipeline saving estimate (1/3, 0.5, 0.125): {saving:.4f}")

    if args.csv_dir:
        from pathlib import Path
        out = Path(args.csv_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "matrix_sweep.csv", "w", encoding="ascii", newline="") as fh:
            analytics.write_csv(sizes, fh)
        with open(out / "n_sweep.csv", "w", encoding="ascii", newline="") as fh:
            analytics.write_csv(nvals, fh)
    return 0


if __name__ == "__main__":
    sys.exit(main())
