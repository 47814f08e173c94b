"""
Directional log-concavity.

For the gadget f(x, z) = z^3 + 3|x|^2 z + 2 q(x), restricting to the z
direction at a fixed x gives the depressed cubic z^3 + b z + c with
b = 3|x|^2 and c = 2 q(x), which is log-concave on z >= 0 iff 4b^3 >= 27c^2.
So f is log-concave in the z direction iff max of q on the unit sphere is <= 1.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from lorentzian import config
from lorentzian.services.gadgets.graphs import Graph
from lorentzian.services.gadgets.stability import (
    a_squared,
    build_q_G,
    clique_point,
    ell_of_k,
)
from lorentzian.services.linalg.radicals import compare_to_sqrt
from lorentzian.services.oracles.clique import max_clique
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.operations import (
    IntegerForm,
    evaluate,
    has_nonneg_coeffs,
    is_homogeneous,
    univariate_restriction,
)
from lorentzian.services.poly.polynomial import Number, Polynomial

logger = logging.getLogger(__name__)

CUBE_ROOT_BITS = 32


class DirectionalError(ValueError):
    """Raised when a directional check's preconditions fail."""


# -------------------------------------------------
# Depressed cubics
# -------------------------------------------------
@dataclass(frozen=True)
class DepressedCubic:
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        if self.b < 0 or self.c < 0:
            raise DirectionalError(f"coefficients must be >= 0, got b={self.b}, c={self.c}")

    def numerator(self, z: Number) -> Fraction:
        """f f'' - f'^2 = -3 z^4 + 6 c z - b^2."""
        z = Fraction(z)
        return -3 * z**4 + 6 * self.c * z - self.b * self.b

    def is_log_concave(self) -> bool:
        return 4 * self.b**3 >= 27 * self.c**2


def depressed_cubic_log_concave(b: Number, c: Number) -> bool:
    return DepressedCubic(Fraction(b), Fraction(c)).is_log_concave()


def cube_root_approx(value: Fraction, *, bits: int = CUBE_ROOT_BITS) -> Fraction:
    """Rational r with r <= value^(1/3) < r + 2^-bits, for value >= 0."""
    if value < 0:
        raise DirectionalError(f"cube root of a negative value {value}")
    scale = 1 << bits
    target = math.floor(value * scale**3)
    lo, hi = 0, 1 << (target.bit_length() // 3 + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**3 <= target:
            lo = mid
        else:
            hi = mid - 1
    return Fraction(lo, scale)


# -------------------------------------------------
# Gadget
# -------------------------------------------------
@dataclass(frozen=True)
class DirectionalGadget:
    q: Polynomial
    assembled: Polynomial
    graph: Graph | None = None
    k: int | None = None
    ell: Fraction | None = None

    @property
    def z_index(self) -> int:
        return self.q.num_vars

    def variable_names(self) -> list[str]:
        if self.graph is None:
            labels = [f"x{i}" for i in range(self.q.num_vars)]
        else:
            labels = [f"x{i}" for i in range(self.graph.n)]
            labels += [f"y{i}_{j}" for i, j in self.graph.edges]
        return labels + ["z"]


def build_directional_gadget(q: Polynomial) -> DirectionalGadget:
    """z^3 + 3|x|^2 z + 2 q(x) in n + 1 variables, z last."""
    homogeneous, degree = is_homogeneous(q)
    if not homogeneous or degree not in (3, None):
        raise DirectionalError(f"q must be a homogeneous cubic, got degree {q.degree}")
    if not has_nonneg_coeffs(q):
        raise DirectionalError("q must have nonnegative coefficients")
    n = q.num_vars
    z = n
    terms: dict[Monomial, Fraction] = {Monomial.var(z, 3): Fraction(1)}
    for i in range(n):
        terms[Monomial.of({i: 2, z: 1})] = Fraction(3)
    for mono, c in q.terms.items():
        terms[mono] = 2 * c
    return DirectionalGadget(q=q, assembled=Polynomial(n + 1, terms))


def build_graph_directional_gadget(graph: Graph, k: int) -> DirectionalGadget:
    """q = q_G / l with l = l(k), or the grid floor 1/(8n^2) when k = 1."""
    if graph.n < 1 or not 1 <= k <= graph.n:
        raise DirectionalError(f"directional gadget needs 1 <= k <= n, got k={k}, n={graph.n}")
    q_g = build_q_G(graph)
    m = q_g.num_vars
    ell = ell_of_k(m, k) if k >= 2 else Fraction(1, 8 * m * m)
    gadget = build_directional_gadget(q_g.scale(1 / ell))
    logger.info("directional gadget n=%d k=%d: ell=%s", graph.n, k, ell)
    return DirectionalGadget(q=gadget.q, assembled=gadget.assembled, graph=graph, k=k, ell=ell)


# -------------------------------------------------
# Pointwise test
# -------------------------------------------------
def directional_numerator(f: Polynomial, base: Sequence[Number], v: Sequence[Number]) -> Fraction:
    """f * D_v^2 f - (D_v f)^2 at base, from the restriction t -> f(base + t v)."""
    phi = univariate_restriction(f, base, v)
    coeffs = list(phi.coefficients) + [Fraction(0)] * 3
    c0, c1, c2 = coeffs[0], coeffs[1], coeffs[2]
    return 2 * c0 * c2 - c1 * c1


def directional_lc_at(f: Polynomial, base: Sequence[Number], v: Sequence[Number]) -> bool:
    if any(Fraction(b) < 0 for b in base):
        raise DirectionalError("base point must be nonnegative")
    value = evaluate(f, base)
    if value <= 0:
        raise DirectionalError(f"f(base) = {value} must be positive")
    return directional_numerator(f, base, v) <= 0


def directional_witness(gadget: DirectionalGadget, x: Sequence[Number]) -> list[Fraction] | None:
    """
    A point (x, z) where the gadget fails log-concavity in z, or None.

    z starts from a rational approximation of (c/2)^(1/3), the maximizer of
    the depressed-cubic numerator, and a few neighbours are tried.
    """
    xs = [Fraction(a) for a in x]
    b = 3 * sum((a * a for a in xs), Fraction(0))
    c = 2 * evaluate(gadget.q, xs)
    cubic = DepressedCubic(b, c)
    if cubic.is_log_concave():
        return None
    centre = cube_root_approx(c / 2)
    step = Fraction(1, 1 << CUBE_ROOT_BITS)
    for z in (centre, centre + step, centre - step):
        if z > 0 and cubic.numerator(z) > 0:
            point = xs + [z]
            if not directional_lc_at(gadget.assembled, point, _unit(len(point), gadget.z_index)):
                return point
    return None


def _unit(n: int, index: int) -> list[int]:
    return [1 if i == index else 0 for i in range(n)]


# -------------------------------------------------
# Verdicts
# -------------------------------------------------
@dataclass(frozen=True)
class DirectionalScan:
    verdict: bool
    exact: bool
    witness_grid: tuple[int, ...] | None = None
    witness_point: tuple[Fraction, ...] | None = None
    points_scanned: int = 0
    subdivisions: int | None = None
    clique: tuple[int, ...] = field(default_factory=tuple)


def grid_subdivisions(n: int, grid: int, max_points: int) -> int:
    """The largest s <= grid whose simplex grid has at most max_points points (s >= 1)."""
    if n < 1 or grid < 1:
        raise DirectionalError(f"grid needs n >= 1 and grid >= 1, got n={n}, grid={grid}")
    s = grid
    while s > 1 and math.comb(s + n - 1, n - 1) > max_points:
        s -= 1
    return s


def _simplex_grid(n: int, subdivisions: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors with coordinate sum = subdivisions (stars and bars)."""
    for bars in combinations(range(subdivisions + n - 1), n - 1):
        prev = -1
        point = []
        for b in bars:
            point.append(b - prev - 1)
            prev = b
        point.append(subdivisions + n - 2 - prev)
        yield tuple(point)


def _grid_check(form: IntegerForm, point: tuple[int, ...]) -> bool:
    """
    True when the z-restriction at point is not log-concave. With Q = L q(point)
    that is 4 b^3 L^2 < 27 (2Q)^2; q = 0 gives c = 0, which always passes.
    """
    b = 3 * sum(a * a for a in point)
    c = 2 * form.value(point)
    return 4 * b**3 * form.scale**2 < 27 * c * c


def gadget_directional_verdict(
    gadget: DirectionalGadget,
    *,
    omega: int | None = None,
    clique: Sequence[int] | None = None,
    grid: int | None = None,
    max_points: int | None = None,
    threads: int = 1,
) -> DirectionalScan:
    """
    Exact for graph gadgets (compare l against a(omega)); otherwise a grid
    scan of the nonnegative simplex, which can only falsify. The grid is
    coarsened until it has at most max_points points.
    """
    if gadget.graph is not None:
        graph = gadget.graph
        if clique is None:
            clique = max_clique(graph) if omega is None else None
        if omega is None:
            omega = len(clique)
        holds = compare_to_sqrt(gadget.ell, a_squared(omega)) >= 0
        witness = None
        if not holds and clique is not None:
            point = directional_witness(gadget, clique_point(graph, clique))
            witness = tuple(point) if point is not None else None
        return DirectionalScan(
            verdict=holds,
            exact=True,
            witness_point=witness,
            clique=tuple(clique or ()),
        )

    if gadget.q.is_zero():
        return DirectionalScan(verdict=True, exact=True)

    n = gadget.q.num_vars
    grid = config.GRID if grid is None else grid
    max_points = config.GRID_POINTS if max_points is None else max_points
    subdivisions = grid_subdivisions(n, grid, max_points)
    if subdivisions < grid:
        logger.info("grid coarsened from %d to %d subdivisions for n=%d", grid, subdivisions, n)

    form = IntegerForm(gadget.q)
    points = list(_simplex_grid(n, subdivisions))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda pt: _grid_check(form, pt), points))
    else:
        results = [_grid_check(form, pt) for pt in points]

    for point, violates in zip(points, results):
        if violates:
            found = directional_witness(gadget, point)
            return DirectionalScan(
                verdict=False,
                exact=False,
                witness_grid=point,
                witness_point=tuple(found) if found is not None else None,
                points_scanned=len(points),
                subdivisions=subdivisions,
            )
    return DirectionalScan(
        verdict=True, exact=False, points_scanned=len(points), subdivisions=subdivisions
    )
