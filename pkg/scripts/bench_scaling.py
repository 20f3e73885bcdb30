"""Time the full pipeline on random walks of growing length.

    python scripts/bench_scaling.py --edges 1000 10000 100000 --eps 0.1
"""

import argparse
import time

from trajhotspot import Config, max_point_weight_square, square_weight, tile_trajectory
from trajhotspot.generate import random_walk


def stage_times(n: int, cfg: Config, seed: int) -> dict:
    t0 = time.process_time()
    traj = random_walk(n, seed=seed)
    t1 = time.process_time()
    pts = tile_trajectory(traj, cfg)
    t2 = time.process_time()
    best = max_point_weight_square(pts, cfg.window_side)
    t3 = time.process_time()
    square_weight(traj, best.square.concentric(cfg.result_side))
    t4 = time.process_time()
    return {"m": len(pts), "gen": t1 - t0, "tile": t2 - t1, "sweep": t3 - t2, "clip": t4 - t3, "total": t4 - t0}


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--edges", type=int, nargs="+", default=[1000, 10000, 100000])
    p.add_argument("--side", type=float, default=1.0)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    cfg = Config(args.side, args.eps)
    stage_times(100, cfg, args.seed)  # compile

    best = {}
    for _ in range(args.repeats):
        for n in args.edges:
            row = stage_times(n, cfg, args.seed)
            if n not in best or row["total"] < best[n]["total"]:
                best[n] = row

    print(f"{'n':>9} {'m':>10} {'gen':>7} {'tile':>7} {'sweep':>7} {'clip':>7} {'total':>7} {'ratio':>6}")
    prev = None
    for n in args.edges:
        r = best[n]
        ratio = f"{r['total'] / prev:6.2f}" if prev else "     -"
        print(f"{n:9d} {r['m']:10d} {r['gen']:7.3f} {r['tile']:7.3f} {r['sweep']:7.3f} "
              f"{r['clip']:7.3f} {r['total']:7.3f} {ratio}")
        prev = r["total"]


if __name__ == "__main__":
    main()
