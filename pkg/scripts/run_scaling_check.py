"""
Timing of is_lorentzian on sparse random cubics with nonnegative coefficients,
and optionally the stability sampler throughput on the P3 gadget.

    python scripts/run_scaling_check.py --sizes 10,20,40,60
    python scripts/run_scaling_check.py --sizes 10 --sampler-trials 100000
"""

import argparse
import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lorentzian import config
from lorentzian.services.gadgets.graphs import Graph
from lorentzian.services.gadgets.stability import build_stability_gadget
from lorentzian.services.lorentzian_check import is_lorentzian
from lorentzian.services.oracles.samplers import stability_sampler
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.polynomial import Polynomial


def random_cubic(n: int, terms: int, rng: random.Random) -> Polynomial:
    out: dict[Monomial, Fraction] = {}
    # a chain keeps the support connected
    for i in range(n - 1):
        out[Monomial.from_indices((i, i, i + 1))] = Fraction(rng.randint(1, 9))
    for _ in range(terms):
        idx = tuple(sorted(rng.randrange(n) for _ in range(3)))
        out[Monomial.from_indices(idx)] = Fraction(rng.randint(1, 9))
    return Polynomial(n, out)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--sizes", default="10,20,40,60")
    p.add_argument("--terms-per-var", type=int, default=3)
    p.add_argument("--seed", type=int, default=config.SEED)
    p.add_argument("--threads", type=int, default=config.THREADS)
    p.add_argument("--sampler-trials", type=int, default=0)
    args = p.parse_args()

    config.configure_logging()
    rng = random.Random(args.seed)
    rows = []
    for n in (int(s) for s in args.sizes.split(",")):
        f = random_cubic(n, args.terms_per_var * n, rng)
        start = time.perf_counter()
        verdict = is_lorentzian(f, threads=args.threads)
        elapsed = time.perf_counter() - start
        rows.append((n, elapsed))
        print(f"n={n:3d} terms={len(f):5d} lorentzian={verdict.is_lorentzian!s:5s} "
              f"checked={verdict.derivatives_checked:5d} {elapsed:.3f}s")

    for (n0, t0), (n1, t1) in zip(rows, rows[1:]):
        if t0 > 0 and t1 > 0:
            print(f"growth exponent {n0}->{n1}: {math.log(t1 / t0) / math.log(n1 / n0):.2f}")

    if args.sampler_trials:
        gadget = build_stability_gadget(Graph.path(3), 2)
        start = time.perf_counter()
        report = stability_sampler(gadget, trials=args.sampler_trials, seed=args.seed, threads=args.threads)
        elapsed = time.perf_counter() - start
        print(f"stability sampler P3 k=2: {report.samples_tried} trials {report.verdict.value} "
              f"{elapsed:.3f}s ({report.samples_tried / elapsed:.0f} trials/s)")


if __name__ == "__main__":
    main()
