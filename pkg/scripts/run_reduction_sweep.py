"""
Full-budget reduction sweep over every graph on up to 5 vertices.

    python scripts/run_reduction_sweep.py --max-vertices 5 --trials 10000
"""

import argparse
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lorentzian import config
from lorentzian.models.enums import ReductionStatus
from lorentzian.services.oracles.reductions import reduction_sweep


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=config.SEED)
    p.add_argument("--threads", type=int, default=config.THREADS)
    p.add_argument("--kinds", default="stability,quartic-lc,directional")
    args = p.parse_args()

    config.configure_logging("INFO")
    reports = reduction_sweep(
        args.max_vertices,
        kinds=[k for k in args.kinds.split(",") if k],
        trials=args.trials,
        seed=args.seed,
        threads=args.threads,
    )

    by_kind: dict[str, Counter] = {}
    for r in reports:
        by_kind.setdefault(r.kind.value, Counter())[r.status.value] += 1
    for kind, counts in by_kind.items():
        print(f"{kind:12s} " + "  ".join(f"{s}={n}" for s, n in sorted(counts.items())))

    bad = [r for r in reports if r.status != ReductionStatus.AGREE]
    for r in bad:
        print(f"  {r.status.value}: {r.kind.value} n={r.graph.n} edges={list(r.graph.edges)} k={r.k}")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
