import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from lorentzian.models.enums import FailureKind, SampleVerdict
from lorentzian.services.gadgets.stability import build_stability_gadget
from lorentzian.services.linalg.univariate import is_real_rooted
from lorentzian.services.lorentzian_check import is_lorentzian
from lorentzian.services.oracles.clique import OracleError
from lorentzian.services.oracles.samplers import (
    hessian_witness,
    hyperbolicity_sampler,
    log_concavity_sampler,
    stability_sampler,
)
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.operations import univariate_restriction
from lorentzian.services.poly.polynomial import Polynomial


def test_elementary_symmetric_is_not_falsified(elementary):
    report = stability_sampler(elementary(2, 3), trials=200, seed=1)

    assert report.verdict == SampleVerdict.NOT_FALSIFIED
    assert report.samples_tried == 200
    assert report.witness is None


def test_sum_of_squares_is_falsified(poly):
    report = stability_sampler(poly(2, {(0, 0): 1, (1, 1): 1}), trials=50, seed=0)

    assert report.falsified
    w = report.witness
    assert w.trial == report.samples_tried - 1
    phi = univariate_restriction(poly(2, {(0, 0): 1, (1, 1): 1}), w.point, w.direction)
    assert not is_real_rooted(phi)
    assert w.restriction == phi


def test_sampler_is_deterministic(poly):
    f = poly(3, {(0, 0): 1, (1, 1): 1, (2, 2): 1})

    assert stability_sampler(f, trials=30, seed=5) == stability_sampler(f, trials=30, seed=5)
    assert stability_sampler(f, trials=30, seed=5, threads=3) == stability_sampler(f, trials=30, seed=5)


def test_inhomogeneous_input_is_homogenized(poly):
    # x0 + 1 is stable
    report = stability_sampler(poly(1, {(0,): 1, (): 1}), trials=50, seed=2)

    assert not report.falsified


def test_inhomogeneous_unstable_input(poly):
    # x0^2 + 1 has no real roots along the direction (0, 1)
    report = stability_sampler(poly(1, {(0, 0): 1, (): 1}), trials=50, seed=2)

    assert report.falsified
    assert report.witness.direction[0] == 0


def test_hyperbolicity_sampler(poly):
    e2 = poly(3, {(0, 1): 1, (0, 2): 1, (1, 2): 1})

    assert not hyperbolicity_sampler(e2, [1, 1, 1], trials=100, seed=3).falsified
    # x0^2 - x1^2 - x2^2 is hyperbolic in direction e0
    lorentz = poly(3, {(0, 0): 1, (1, 1): -1, (2, 2): -1})
    assert not hyperbolicity_sampler(lorentz, [1, 0, 0], trials=100, seed=3).falsified
    # but not in direction e1
    with pytest.raises(OracleError):
        hyperbolicity_sampler(lorentz, [0, 1, 0], trials=10)


def test_hyperbolicity_sampler_falsifies(poly):
    f = poly(2, {(0, 0): 1, (1, 1): 1})

    assert hyperbolicity_sampler(f, [1, 0], trials=50, seed=0).falsified


def test_hyperbolicity_needs_homogeneous(poly):
    with pytest.raises(OracleError):
        hyperbolicity_sampler(poly(1, {(0,): 1, (): 1}), [1], trials=5)


def test_stability_gadget_positive_instance(p3):
    gadget = build_stability_gadget(p3, 2)
    report = stability_sampler(gadget, trials=60, seed=0)

    assert not report.falsified


def test_hessian_witness(poly):
    sos = poly(2, {(0, 0): 1, (1, 1): 1})

    assert hessian_witness(sos, [1, 1]).inertia.n_pos == 2
    assert hessian_witness(poly(2, {(0, 1): 1}), [1, 1]) is None
    assert hessian_witness(poly(2, {(0, 1): 1}), [0, 1]) is None


def test_log_concavity_sampler(poly, elementary):
    assert not log_concavity_sampler(elementary(3, 4), trials=40, seed=0).falsified

    report = log_concavity_sampler(poly(2, {(0, 0): 1, (1, 1): 1}), trials=10, seed=0)
    assert report.falsified
    assert report.samples_tried == 1
    assert report.witness.inertia.n_pos == 2


def test_log_concavity_sampler_preconditions(poly):
    with pytest.raises(OracleError):
        log_concavity_sampler(Polynomial.zero(2), trials=5)
    with pytest.raises(OracleError):
        log_concavity_sampler(poly(2, {(0, 1): -1}), trials=5)
    with pytest.raises(OracleError):
        log_concavity_sampler(poly(2, {(0, 1): 1, (0,): 1}), trials=5)


def test_witness_points_are_exact(poly):
    report = log_concavity_sampler(poly(2, {(0, 0): 1, (1, 1): 1}), trials=1, seed=7)

    assert all(isinstance(c, Fraction) for c in report.witness.point)


# ----------------------------
# Agreement with the exact check
# ----------------------------
def _random_cubic_terms(rng: random.Random, n: int) -> Polynomial:
    terms = {
        Monomial.from_indices(idx): rng.randint(1, 5)
        for idx in combinations_with_replacement(range(n), 3)
        if rng.random() < 0.5
    }
    terms.setdefault(Monomial.var(0, 3), 1)
    return Polynomial(n, terms)


def _random_linear_product(rng: random.Random, n: int) -> Polynomial:
    f = Polynomial.constant(n, 1)
    for _ in range(3):
        f = f * Polynomial.linear_form([rng.randint(1, 4) for _ in range(n)])
    return f


def test_accepted_cubics_are_never_falsified():
    rng = random.Random(21)
    accepted = 0
    for i in range(16):
        f = _random_linear_product(rng, 3) if i % 2 else _random_cubic_terms(rng, 3)
        if not is_lorentzian(f).is_lorentzian:
            continue
        accepted += 1
        assert not log_concavity_sampler(f, trials=40, seed=i).falsified

    assert accepted >= 8


def test_bad_inertia_at_origin_is_falsified():
    rng = random.Random(9)
    found = 0
    for i in range(30):
        f = Polynomial(3, {
            Monomial.from_indices(idx): rng.randint(0, 3)
            for idx in combinations_with_replacement(range(3), 2)
        })
        if f.is_zero():
            continue
        w = is_lorentzian(f).failure_witness
        if w is None or w.kind != FailureKind.BAD_INERTIA or any(w.alpha):
            continue
        found += 1
        report = log_concavity_sampler(f, trials=10, seed=i)
        assert report.falsified
        # the Hessian is constant, so the first sample already falsifies
        assert report.samples_tried == 1
        assert report.witness.inertia.n_pos >= 2

    assert found > 0


def test_integer_and_exact_witnesses_agree(poly):
    f = poly(2, {(0, 0): 1, (1, 1): 1})
    report = stability_sampler(f, trials=50, seed=0)
    w = report.witness

    assert w.restriction == univariate_restriction(f, w.point, w.direction)
    assert all(d > 0 for d in w.direction)
    report = log_concavity_sampler(f, trials=5, seed=3)
    assert hessian_witness(f, report.witness.point) is not None
