import math
import random
from fractions import Fraction

import pytest

from lorentzian.services.directional import (
    DepressedCubic,
    DirectionalError,
    build_directional_gadget,
    build_graph_directional_gadget,
    cube_root_approx,
    depressed_cubic_log_concave,
    directional_lc_at,
    directional_numerator,
    directional_witness,
    gadget_directional_verdict,
    grid_subdivisions,
)
from lorentzian.services.gadgets.graphs import Graph
from lorentzian.services.gadgets.stability import ell_of_k
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.polynomial import Polynomial


def test_depressed_cubic_boundary():
    # 4 * 27 == 27 * 4
    assert depressed_cubic_log_concave(3, 2)
    assert not depressed_cubic_log_concave(3, Fraction(201, 100))
    assert depressed_cubic_log_concave(1, 0)


def test_depressed_cubic_rejects_negative():
    with pytest.raises(DirectionalError):
        DepressedCubic(Fraction(-1), Fraction(0))


def test_depressed_cubic_agrees_with_grid_minimum():
    rng = random.Random(4)
    for _ in range(60):
        b = Fraction(rng.randint(0, 16), rng.randint(1, 8))
        c = Fraction(rng.randint(0, 16), rng.randint(1, 8))
        cubic = DepressedCubic(b, c)
        top = 4 * max(1, c)
        grid = [Fraction(i, 64) for i in range(int(top * 64) + 1)]
        z_star = cube_root_approx(c / 2)
        grid += [z_star, z_star + Fraction(1, 1 << 32)]
        worst = max(cubic.numerator(z) for z in grid)
        if cubic.is_log_concave():
            assert worst <= 0
        else:
            assert worst > 0


def test_cube_root_approx():
    r = cube_root_approx(Fraction(27, 8))

    assert r == Fraction(3, 2)
    r = cube_root_approx(Fraction(2), bits=20)
    assert r**3 <= 2 < (r + Fraction(1, 1 << 20)) ** 3

    with pytest.raises(DirectionalError):
        cube_root_approx(Fraction(-1))


def test_gadget_assembly(poly):
    q = poly(2, {(0, 0, 1): 1})
    gadget = build_directional_gadget(q)
    f = gadget.assembled

    assert f.num_vars == 3
    assert gadget.z_index == 2
    assert f.coefficient(Monomial.var(2, 3)) == 1
    assert f.coefficient(Monomial.of({0: 2, 2: 1})) == 3
    assert f.coefficient(Monomial.of({0: 2, 1: 1})) == 2


def test_gadget_rejects_bad_q(poly):
    with pytest.raises(DirectionalError):
        build_directional_gadget(poly(2, {(0, 1): 1}))
    with pytest.raises(DirectionalError):
        build_directional_gadget(poly(2, {(0, 1, 1): -1}))


def test_numerator_and_pointwise_check(poly):
    # f = z^3 + 3 x^2 z + 2 x^3 along z at (x, z) = (1, 1): b = 3, c = 2
    f = build_directional_gadget(poly(1, {(0, 0, 0): 1})).assembled

    assert directional_numerator(f, [1, 1], [0, 1]) == DepressedCubic(Fraction(3), Fraction(2)).numerator(1)
    assert directional_lc_at(f, [1, 1], [0, 1])

    with pytest.raises(DirectionalError):
        directional_lc_at(f, [-1, 1], [0, 1])
    with pytest.raises(DirectionalError):
        directional_lc_at(f, [0, 0], [0, 1])


def test_graph_gadget_ell(p3):
    gadget = build_graph_directional_gadget(p3, 2)

    assert gadget.ell == ell_of_k(5, 2)
    assert build_graph_directional_gadget(p3, 1).ell == Fraction(1, 200)

    with pytest.raises(DirectionalError):
        build_graph_directional_gadget(p3, 4)


@pytest.mark.parametrize(
    "graph, k, expected",
    [
        (Graph.complete(3), 3, True),
        (Graph.complete(3), 2, False),
        (Graph.path(3), 2, True),
        (Graph.path(3), 1, False),
        (Graph.from_edges(3, []), 1, True),
    ],
)
def test_exact_graph_verdict(graph, k, expected):
    scan = gadget_directional_verdict(build_graph_directional_gadget(graph, k))

    assert scan.exact
    assert scan.verdict is expected
    if not expected:
        point = list(scan.witness_point)
        gadget = build_graph_directional_gadget(graph, k)
        assert not directional_lc_at(gadget.assembled, point, [0] * gadget.z_index + [1])


def test_witness_for_large_q(poly):
    gadget = build_directional_gadget(poly(2, {(0, 0, 1): 10}))
    point = directional_witness(gadget, [1, 1])

    assert point is not None
    assert not directional_lc_at(gadget.assembled, point, [0, 0, 1])
    assert directional_witness(build_directional_gadget(poly(2, {(0, 0, 1): Fraction(1, 10)})), [1, 1]) is None


def test_grid_scan_finds_violation(poly):
    scan = gadget_directional_verdict(build_directional_gadget(poly(2, {(0, 0, 1): 10})), grid=8)

    assert not scan.verdict
    assert not scan.exact
    assert sum(scan.witness_grid) == 8
    assert scan.witness_point is not None


def test_grid_scan_counts_zero_q_points_as_passing(poly):
    scan = gadget_directional_verdict(build_directional_gadget(poly(2, {(0, 1, 1): Fraction(1, 10)})), grid=4)

    # q vanishes at (4, 0) and (0, 4); there c = 0 and the cubic is log-concave
    assert scan.verdict
    assert scan.points_scanned == 5
    assert scan.subdivisions == 4


def test_grid_is_coarsened_to_the_point_cap(poly):
    # C(6 + 2, 2) = 28 points; the cap of 10 leaves C(3 + 2, 2) = 10
    assert grid_subdivisions(3, 6, 10) == 3
    assert grid_subdivisions(8, 20, 20000) == 10
    assert grid_subdivisions(4, 20, 20000) == 20
    assert grid_subdivisions(5, 20, 1) == 1
    with pytest.raises(DirectionalError):
        grid_subdivisions(0, 20, 10)

    gadget = build_directional_gadget(poly(3, {(0, 1, 2): 1}))
    scan = gadget_directional_verdict(gadget, grid=6, max_points=10)
    assert scan.subdivisions == 3
    assert scan.points_scanned == 10


def test_depressed_cubic_threshold_is_monotone_in_c():
    # for fixed b the log-concave region is c <= sqrt(4 b^3 / 27)
    for b in (Fraction(1), Fraction(3), Fraction(7, 2), Fraction(12)):
        lo, hi = Fraction(0), b * b + 1
        assert depressed_cubic_log_concave(b, lo)
        assert not depressed_cubic_log_concave(b, hi)
        for _ in range(40):
            mid = (lo + hi) / 2
            if depressed_cubic_log_concave(b, mid):
                lo = mid
            else:
                hi = mid
        threshold = math.sqrt(4 * float(b) ** 3 / 27)
        assert abs(float(lo) - threshold) < 1e-9
        for c in (lo / 2, lo / 3, Fraction(0)):
            assert depressed_cubic_log_concave(b, c)
        for c in (hi * 2, hi + 1):
            assert not depressed_cubic_log_concave(b, c)


def test_grid_scan_threads_agree(poly):
    gadget = build_directional_gadget(poly(3, {(0, 1, 2): 6, (0, 0, 1): 1}))

    assert gadget_directional_verdict(gadget, grid=6, threads=3) == gadget_directional_verdict(gadget, grid=6)


def test_zero_q_is_log_concave():
    scan = gadget_directional_verdict(build_directional_gadget(Polynomial.zero(2)))

    assert scan.verdict
    assert scan.exact
