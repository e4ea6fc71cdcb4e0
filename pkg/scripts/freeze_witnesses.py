"""Search for the four negative-claim witnesses and freeze them as a test fixture.

    python scripts/freeze_witnesses.py [--seed 7] [--out tests/fixtures/witnesses.json]
"""

import argparse
import json
from pathlib import Path

from nmrel.verify import CLAIMS, GenConfig, find_counterexample

HERE = Path(__file__).resolve().parent

GRID = (0.0, 0.3, 0.6, 1.0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-trials", type=int, default=10_000)
    ap.add_argument("--out", default=str(HERE.parent / "tests" / "fixtures" / "witnesses.json"))
    args = ap.parse_args()

    cfg = GenConfig(seed=args.seed, universe_size=3, dimension=1, value_grid=GRID)
    found = {}
    for claim in sorted(CLAIMS):
        w = find_counterexample(claim, cfg, args.max_trials)
        if w is None:
            raise SystemExit(f"no witness for {claim} within {args.max_trials} trials")
        found[claim] = w
        print(f"{claim:32s} trial {w['trial']}")
    out = {"config": {"seed": cfg.seed, "universe_size": 3, "dimension": 1, "grid": list(GRID)}, "witnesses": found}
    Path(args.out).write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
