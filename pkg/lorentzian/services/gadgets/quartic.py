"""
Quartic log-concavity gadget.

b_G(x; y) = -2k sum_{ij in E} x_i x_j y_i y_j - (1 - k) |x|^2 |y|^2 is PSD iff
omega(G) <= k. Adding (n^2 gamma / 2)(sum x^4 + sum y^4 + sum_{i<j} x_i^2 x_j^2
+ sum_{i<j} y_i^2 y_j^2) gives a quartic f that is convex iff b_G is PSD, and
g = N (z + sum of all variables)^4 - f has nonnegative coefficients and is
log-concave on the orthant iff f is convex there.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from lorentzian.services.gadgets.graphs import GadgetError, Graph
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.operations import differentiate, evaluate, has_nonneg_coeffs
from lorentzian.services.poly.polynomial import Polynomial

logger = logging.getLogger(__name__)


def _check_k(graph: Graph, k: int) -> None:
    if graph.n < 1 or not 1 <= k <= graph.n:
        raise GadgetError(f"quartic gadget needs 1 <= k <= n, got k={k}, n={graph.n}")


def build_biquadratic(graph: Graph, k: int) -> Polynomial:
    """b_G in 2n variables: x_0..x_{n-1} then y_0..y_{n-1}."""
    _check_k(graph, k)
    n = graph.n
    terms: dict[Monomial, Fraction] = {}
    for i, j in graph.edges:
        mono = Monomial.from_indices((i, j, n + i, n + j))
        terms[mono] = terms.get(mono, Fraction(0)) - 2 * k
    if k != 1:
        for i in range(n):
            for j in range(n):
                mono = Monomial.of({i: 2, n + j: 2})
                terms[mono] = terms.get(mono, Fraction(0)) - (1 - k)
    return Polynomial(2 * n, terms)


def mixed_hessian(b: Polynomial, n: int) -> list[list[Polynomial]]:
    """C[i][j] = d^2 b / dx_i dy_j."""
    return [
        [differentiate(b, Monomial.of({i: 1, n + j: 1})) for j in range(n)]
        for i in range(n)
    ]


def _sum_quartic_squares(n: int, offset: int) -> dict[Monomial, Fraction]:
    terms = {Monomial.var(offset + i, 4): Fraction(1) for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            terms[Monomial.of({offset + i: 2, offset + j: 2})] = Fraction(1)
    return terms


def build_quartic_convexity_form(graph: Graph, k: int) -> tuple[Polynomial, Fraction]:
    """(f, gamma) with f = b_G + (n^2 gamma / 2)(...)."""
    b = build_biquadratic(graph, k)
    n = graph.n
    gamma = max(
        (abs(c) for row in mixed_hessian(b, n) for entry in row for c in entry.coefficients()),
        default=Fraction(0),
    )
    weight = Fraction(n * n) * gamma / 2
    padding = Polynomial(2 * n, {**_sum_quartic_squares(n, 0), **_sum_quartic_squares(n, n)})
    return b + padding.scale(weight), gamma


@dataclass(frozen=True)
class QuarticGadget:
    graph: Graph
    k: int
    b: Polynomial
    gamma: Fraction
    f: Polynomial
    N: Fraction
    g: Polynomial

    def variable_names(self) -> list[str]:
        n = self.graph.n
        return [f"x{i}" for i in range(n)] + [f"y{i}" for i in range(n)] + ["z"]


def build_quartic_lc_gadget(graph: Graph, k: int) -> QuarticGadget:
    b = build_biquadratic(graph, k)
    f, gamma = build_quartic_convexity_form(graph, k)
    top = max(f.coefficients(), default=Fraction(0))
    big_n = top if top > 0 else Fraction(1)

    total = 2 * graph.n + 1
    linear = Polynomial.linear_form([1] * total)
    g = (linear**4).scale(big_n) - f.embed(total)
    if not has_nonneg_coeffs(g):
        raise GadgetError("quartic gadget g has a negative coefficient")

    logger.info(
        "quartic gadget n=%d |E|=%d k=%d: gamma=%s N=%s terms=%d",
        graph.n, graph.num_edges, k, gamma, big_n, len(g),
    )
    return QuarticGadget(graph=graph, k=k, b=b, gamma=gamma, f=f, N=big_n, g=g)


def clique_indicator_point(graph: Graph, clique: Sequence[int]) -> list[Fraction]:
    """(x = 1 on the clique, y = 0, z = 1) in the variables of g."""
    members = set(clique)
    if not graph.is_clique(members):
        raise GadgetError(f"{sorted(members)} is not a clique")
    n = graph.n
    return [Fraction(1 if i in members else 0) for i in range(n)] + [Fraction(0)] * n + [Fraction(1)]


def biquadratic_value_at_clique(graph: Graph, k: int, clique: Sequence[int]) -> Fraction:
    """
    b_G(x; x) at the unit vector x = 1_C / sqrt(omega), equal to k/omega - 1;
    negative certifies that b_G is not PSD. Evaluated at 1_C and rescaled by
    omega^2 so the value stays rational.
    """
    members = set(clique)
    if not graph.is_clique(members) or not members:
        raise GadgetError(f"{sorted(members)} is not a nonempty clique")
    omega = len(members)
    x = [Fraction(1 if i in members else 0) for i in range(graph.n)]
    return evaluate(build_biquadratic(graph, k), x + x) / (omega * omega)
