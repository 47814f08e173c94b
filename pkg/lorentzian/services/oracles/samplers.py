"""
Seeded falsification samplers.

Each sampler draws its trial inputs sequentially from random.Random(seed),
evaluates them in batches (optionally on a thread pool) and reports the
lowest-index falsifying trial, so the report depends only on the seed.
"""

from __future__ import annotations

import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, TypeVar

from lorentzian import config
from lorentzian.models.enums import SampleVerdict, WitnessSource
from lorentzian.services.gadgets.stability import StabilityGadget
from lorentzian.services.linalg.matrix import Inertia, inertia, integer_inertia
from lorentzian.services.linalg.univariate import UniPoly, integer_is_real_rooted, is_real_rooted
from lorentzian.services.oracles.clique import OracleError
from lorentzian.services.poly.operations import (
    IntegerForm,
    evaluate,
    has_nonneg_coeffs,
    hessian_at,
    homogenize,
    is_homogeneous,
    univariate_restriction,
)
from lorentzian.services.poly.polynomial import Number, Polynomial

logger = logging.getLogger(__name__)

BATCH_SIZE = 256
POSITIVE_SHIFT = Fraction(1, 256)

T = TypeVar("T")


@dataclass(frozen=True)
class SampleWitness:
    point: tuple[Fraction, ...]
    direction: tuple[Fraction, ...] | None = None
    restriction: UniPoly | None = None
    inertia: Inertia | None = None
    source: WitnessSource = WitnessSource.SAMPLED
    trial: int | None = None


@dataclass(frozen=True)
class SampleReport:
    verdict: SampleVerdict
    samples_tried: int
    seed: int
    witness: SampleWitness | None = None

    @property
    def falsified(self) -> bool:
        return self.verdict == SampleVerdict.FALSIFIED


# -------------------------------------------------
# Sampling helpers
# -------------------------------------------------
def random_positive(rng: random.Random, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(rng.randint(0, scale), scale) + POSITIVE_SHIFT


def _run_trials(
    draw: Callable[[random.Random], T],
    check: Callable[[T], SampleWitness | None],
    *,
    trials: int,
    seed: int,
    threads: int,
) -> SampleReport:
    rng = random.Random(seed)
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    done = 0
    try:
        while done < trials:
            batch = [draw(rng) for _ in range(min(BATCH_SIZE, trials - done))]
            results = pool.map(check, batch) if pool is not None else map(check, batch)
            for offset, witness in enumerate(results):
                if witness is not None:
                    index = done + offset
                    logger.debug("falsified at trial %d (seed %d)", index, seed)
                    return SampleReport(
                        verdict=SampleVerdict.FALSIFIED,
                        samples_tried=index + 1,
                        seed=seed,
                        witness=SampleWitness(
                            point=witness.point,
                            direction=witness.direction,
                            restriction=witness.restriction,
                            inertia=witness.inertia,
                            trial=index,
                        ),
                    )
            done += len(batch)
            logger.debug("sampled %d/%d trials", done, trials)
    finally:
        if pool is not None:
            pool.shutdown(wait=True, cancel_futures=True)
    return SampleReport(verdict=SampleVerdict.NOT_FALSIFIED, samples_tried=trials, seed=seed)


def _defaults(trials: int | None, seed: int | None, bits: int | None, threads: int | None):
    return (
        config.TRIALS if trials is None else trials,
        config.SEED if seed is None else seed,
        config.SAMPLE_BITS if bits is None else bits,
        config.THREADS if threads is None else threads,
    )


# -------------------------------------------------
# Hyperbolicity / stability
# -------------------------------------------------
def restriction_witness(
    restriction: UniPoly, x: Sequence[Fraction], v: Sequence[Fraction]
) -> SampleWitness | None:
    """Witness when the restriction is a nonzero, not real-rooted polynomial."""
    if restriction.is_zero() or is_real_rooted(restriction):
        return None
    return SampleWitness(point=tuple(x), direction=tuple(v), restriction=restriction)


def _restriction_check(
    scaled: Callable[[list[int], list[int]], list[int]],
    exact: Callable[[list[Fraction], list[Fraction]], UniPoly],
    denominator: int,
) -> Callable[[tuple[list[int], list[int]]], SampleWitness | None]:
    """
    Decide on integer coefficients of a positive multiple of the restriction;
    the exact rational restriction is only built for a falsifying sample.
    """

    def check(item: tuple[list[int], list[int]]) -> SampleWitness | None:
        x, v = item
        coeffs = scaled(x, v)
        if not any(coeffs) or integer_is_real_rooted(coeffs):
            return None
        xs = [Fraction(a, denominator) for a in x]
        vs = [Fraction(a, denominator) for a in v]
        return restriction_witness(exact(xs, vs), xs, vs)

    return check


def hyperbolicity_sampler(
    p: Polynomial,
    e: Sequence[Number],
    *,
    trials: int | None = None,
    seed: int | None = None,
    bits: int | None = None,
    threads: int | None = None,
) -> SampleReport:
    trials, seed, bits, threads = _defaults(trials, seed, bits, threads)
    homogeneous, _ = is_homogeneous(p)
    if not homogeneous:
        raise OracleError("hyperbolicity needs a homogeneous polynomial")
    direction = [Fraction(a) for a in e]
    if evaluate(p, direction) <= 0:
        raise OracleError("p(e) must be positive")

    # p(S x + t S e) = S^d p(x + t e), so integer units keep the roots
    scale = 1 << bits
    units = math.lcm(scale, *(a.denominator for a in direction))
    step = units // scale
    e_int = [int(a * units) for a in direction]
    form = IntegerForm(p)

    def draw(rng: random.Random) -> tuple[list[int], list[int]]:
        return [rng.randint(-scale, scale) * step for _ in range(p.num_vars)], e_int

    check = _restriction_check(
        form.restriction, lambda x, v: univariate_restriction(p, x, v), units
    )
    return _run_trials(draw, check, trials=trials, seed=seed, threads=threads)


def stability_sampler(
    target: Polynomial | StabilityGadget,
    *,
    trials: int | None = None,
    seed: int | None = None,
    bits: int | None = None,
    threads: int | None = None,
) -> SampleReport:
    """
    Sample base points x and positive directions v, and look for a
    restriction t -> p(x + t v) with non-real roots.

    A StabilityGadget is sampled through its factored restriction. An
    inhomogeneous polynomial is homogenized first and its directions are
    drawn from {0} x R^n_+. Samples are kept as integers over a common
    denominator; homogeneity makes the scaled restriction a positive
    multiple of the rational one.
    """
    trials, seed, bits, threads = _defaults(trials, seed, bits, threads)

    if isinstance(target, StabilityGadget):
        num_vars = 2 * target.m
        scaled = target.scaled_restriction
        exact = target.restriction
        pinned_first = False
    else:
        p = target
        pinned_first = not is_homogeneous(p)[0]
        if pinned_first:
            p = homogenize(p)
        num_vars = p.num_vars
        scaled = IntegerForm(p).restriction

        def exact(x, v):
            return univariate_restriction(p, x, v)

    scale = 1 << bits
    units = math.lcm(scale, POSITIVE_SHIFT.denominator)
    step = units // scale
    shift = int(POSITIVE_SHIFT * units)

    def draw(rng: random.Random) -> tuple[list[int], list[int]]:
        x = [rng.randint(-scale, scale) * step for _ in range(num_vars)]
        v = [rng.randint(0, scale) * step + shift for _ in range(num_vars)]
        if pinned_first:
            v[0] = 0
        return x, v

    check = _restriction_check(scaled, exact, units)
    return _run_trials(draw, check, trials=trials, seed=seed, threads=threads)


# -------------------------------------------------
# Log-concavity
# -------------------------------------------------
def hessian_witness(f: Polynomial, w: Sequence[Number]) -> SampleWitness | None:
    """Witness when the Hessian at a point with f(w) > 0 has two or more positive eigenvalues."""
    if evaluate(f, w) <= 0:
        return None
    inert = inertia(hessian_at(f, w))
    if inert.n_pos < 2:
        return None
    return SampleWitness(point=tuple(Fraction(a) for a in w), inertia=inert)


def log_concavity_sampler(
    f: Polynomial,
    *,
    trials: int | None = None,
    seed: int | None = None,
    bits: int | None = None,
    threads: int | None = None,
) -> SampleReport:
    """
    Sample positive points w and test the Hessian inertia exactly. Points
    are scaled to integers first; homogeneity keeps the inertia unchanged.
    """
    trials, seed, bits, threads = _defaults(trials, seed, bits, threads)
    if f.is_zero() or not has_nonneg_coeffs(f):
        raise OracleError("log-concavity sampling needs a nonzero polynomial with nonnegative coefficients")
    if not is_homogeneous(f)[0]:
        raise OracleError("log-concavity sampling needs a homogeneous polynomial")

    scale = math.lcm(1 << bits, POSITIVE_SHIFT.denominator)
    form = IntegerForm(f)

    def draw(rng: random.Random) -> list[int]:
        return [int(random_positive(rng, bits) * scale) for _ in range(f.num_vars)]

    def check(w: list[int]) -> SampleWitness | None:
        if form.value(w) <= 0:
            return None
        inert = integer_inertia(form.hessian_rows(w))
        if inert.n_pos < 2:
            return None
        return SampleWitness(point=tuple(Fraction(a, scale) for a in w), inertia=inert)

    return _run_trials(draw, check, trials=trials, seed=seed, threads=threads)
