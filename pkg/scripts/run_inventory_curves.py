#!/usr/bin/env python3
"""Print optimal shelf sizes over a grid of profit/cost ratios and mu values.

File outputs (CSV + SVG) come from the equivalent CLI call:
    longtail reproduce --figure 3 --out-dir <dir>
"""

import argparse

from longtail.experiments import run_inventory_curves


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha", type=float, default=3.5)
    parser.add_argument("--ab-ratios", default="10,100,1000,10000,100000,1000000",
                        dest="ab_ratios", help="comma-separated A/B ratios")
    parser.add_argument("--mu", default="0.0001,0.001,0.01,0.1,0.5",
                        help="comma-separated mu values")
    args = parser.parse_args()

    ab_ratios = tuple(float(v) for v in args.ab_ratios.split(","))
    mu_grid = tuple(float(v) for v in args.mu.split(","))
    points = run_inventory_curves(alpha=args.alpha, ab_ratios=ab_ratios, mu_grid=mu_grid)

    print(f"optimal shelf size (closed form, alpha={args.alpha})\n")
    print(f"{'A/B':>10} " + " ".join(f"mu={mu:<9g}" for mu in mu_grid))
    for ab in ab_ratios:
        row = [p for p in points if p.ab_ratio == ab]
        print(f"{ab:10g} " + " ".join(f"{p.y_value:<12.2f}" for p in row))


if __name__ == "__main__":
    main()
