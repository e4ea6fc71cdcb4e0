"""Run every registered law at several universe sizes and dimensions.

    python scripts/run_law_suite.py --trials 1000 --seed 42
    python scripts/run_law_suite.py --exhaustive
"""

import argparse
import time

from nmrel.verify import LAWS, GenConfig, ResourceError, check_law, exhaustive_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--sizes", default="2,3,4")
    ap.add_argument("--dims", default="1,3")
    ap.add_argument("--grid", default=None)
    ap.add_argument("--exhaustive", action="store_true")
    args = ap.parse_args()
    grid = tuple(float(v) for v in args.grid.split(",")) if args.grid else None

    start = time.perf_counter()
    bad = 0
    for name in sorted(LAWS):
        if args.exhaustive:
            try:
                dim = 2 if LAWS[name].domain == "set" else 1
                rep = exhaustive_check(name, grid or (0.0, 0.5, 1.0), 2, dim)
            except ResourceError as exc:
                print(f"{name:40s} skipped: {exc}")
                continue
            reps = [rep]
        else:
            reps = [
                check_law(name, GenConfig(seed=args.seed, universe_size=n, dimension=d, value_grid=grid), args.trials)
                for n in map(int, args.sizes.split(","))
                for d in map(int, args.dims.split(","))
            ]
        fails = sum(r.failures for r in reps)
        trials = sum(r.trials for r in reps)
        skipped = sum(r.skipped for r in reps)
        bad += fails > 0
        print(f"{name:40s} trials={trials:8d} skipped={skipped:7d} failures={fails}")
    print(f"{len(LAWS)} laws, {bad} failing, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
