"""How much weight the approximate squares capture compared with a fine grid.

For each random trajectory the grid maximum over side-s squares is a lower
bound on the best possible dwell time.  Prints, per eps, the ratio of the
returned square's dwell time to that bound (>= 1 is guaranteed) and the
same for the side-s duration variant (>= 1/4 is guaranteed).
"""

import argparse

import numpy as np

from trajhotspot import Config, approximate_hotspot, duration_approx_hotspot
from trajhotspot.generate import random_walk
from trajhotspot.oracle import grid_lower_bound


def main() -> None:
    p = argparse.ArgumentParser(description="Approximation quality against a grid lower bound.")
    p.add_argument("--trajectories", type=int, default=30)
    p.add_argument("--edges", type=int, default=40)
    p.add_argument("--side", type=float, default=1.0)
    p.add_argument("--eps", type=float, nargs="+", default=[0.1, 0.25, 0.5, 1.0])
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    s = args.side
    walks = [random_walk(args.edges, step_mean=s / 2, seed=args.seed + i) for i in range(args.trajectories)]
    grid = [grid_lower_bound(w, s, s / 32) for w in walks]

    print(f"{'eps':>6} {'min':>7} {'median':>7} {'max':>7}   (size variant / grid bound)")
    for eps in args.eps:
        ratios = [approximate_hotspot(w, Config(s, eps)).true_weight / g for w, g in zip(walks, grid)]
        print(f"{eps:6.2f} {min(ratios):7.3f} {np.median(ratios):7.3f} {max(ratios):7.3f}")

    ratios = [duration_approx_hotspot(w, s).true_weight / g for w, g in zip(walks, grid)]
    print(f"duration variant / grid bound: min {min(ratios):.3f}, median {np.median(ratios):.3f}")


if __name__ == "__main__":
    main()
