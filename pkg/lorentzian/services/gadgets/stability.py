"""
Cubic stability gadget: from a graph G and a clique bound k, build

    p(x0, x, y) = x0^3 - 3 x0 (|x|^2 + |y|^2) + 2 q_G(x, y) / l(k)

with q_G(x, y) = sum over edges ij of x_i x_j y_ij, and its pullback
p~(z, w) = p(M (z, w)) where the columns of M are e0 + eps e_i followed by
e0 - eps e_i. p~ is real stable iff p is hyperbolic w.r.t. e0 iff
omega(G) <= k.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from lorentzian.services.gadgets.graphs import GadgetError, Graph
from lorentzian.services.linalg.radicals import ceil_of_scaled_sqrt, compare_to_sqrt
from lorentzian.services.linalg.univariate import UniPoly
from lorentzian.services.poly.linear_map import IntegerMap, LinearMap
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.operations import (
    IntegerForm,
    evaluate,
    substitute_linear,
    univariate_restriction,
)
from lorentzian.services.poly.polynomial import Number, Polynomial

logger = logging.getLogger(__name__)

SQRT_BITS = 40


# -------------------------------------------------
# q_G and the clique constants
# -------------------------------------------------
def build_q_G(graph: Graph) -> Polynomial:
    """Variables: x_0..x_{n-1} (vertices) then y_e in edge order."""
    n = graph.n
    terms = {
        Monomial.from_indices((i, j, n + e)): 1 for e, (i, j) in enumerate(graph.edges)
    }
    return Polynomial(n + graph.num_edges, terms)


def a_squared(k: int) -> Fraction:
    """a(k)^2 = (2/27)(1 - 1/k), the squared max of q_G on the unit sphere when omega = k."""
    if k < 1:
        raise GadgetError(f"k must be >= 1, got {k}")
    return Fraction(2, 27) * (1 - Fraction(1, k))


def ell_of_k(num_vars: int, k: int) -> Fraction:
    """Rational l(k) = ceil(8n^2 a(k)) / 8n^2 with n = num_vars of q_G."""
    if k < 1:
        raise GadgetError(f"k must be >= 1, got {k}")
    if num_vars < 1:
        raise GadgetError(f"q_G needs at least one variable, got {num_vars}")
    m = 8 * num_vars * num_vars
    return Fraction(ceil_of_scaled_sqrt(a_squared(k), m), m)


def sandwich_check(n: int, k: int) -> bool:
    """a(k) <= l(k) < a(k+1); the upper comparison is skipped when k = n."""
    ell = ell_of_k(n, k)
    if compare_to_sqrt(ell, a_squared(k)) < 0:
        return False
    if k < n and compare_to_sqrt(ell, a_squared(k + 1)) >= 0:
        return False
    return True


def _sqrt_approx(value: int, bits: int = SQRT_BITS) -> Fraction:
    scale = 1 << bits
    return Fraction(math.isqrt(value * scale * scale), scale)


def clique_point(graph: Graph, clique: Sequence[int], *, bits: int = SQRT_BITS) -> list[Fraction]:
    """
    Rational near-maximizer of q_G / |.|^3 supported on a clique:
    sqrt(omega - 1) (rounded down) on clique vertices, 1 on clique edges.
    """
    members = set(clique)
    if not graph.is_clique(members):
        raise GadgetError(f"{sorted(members)} is not a clique")
    s = _sqrt_approx(len(members) - 1, bits)
    point = [s if i in members else Fraction(0) for i in range(graph.n)]
    point += [
        Fraction(1) if i in members and j in members else Fraction(0)
        for i, j in graph.edges
    ]
    return point


# -------------------------------------------------
# Gadget
# -------------------------------------------------
def _epsilon_bound(n_coeff: Fraction, m: int) -> Fraction:
    if n_coeff == 0:
        return Fraction(1, 2)
    return min(1 / (2 * n_coeff * m**3), Fraction(1, 2))


def default_epsilon(bound: Fraction) -> Fraction:
    """Largest power of ten strictly below bound."""
    eps = Fraction(1, 10)
    while eps >= bound:
        eps /= 10
    return eps


@dataclass(frozen=True)
class StabilityGadget:
    graph: Graph
    k: int
    ell: Fraction
    p: Polynomial
    N: Fraction
    epsilon: Fraction
    M: LinearMap

    @property
    def m(self) -> int:
        """Number of non-x0 variables of p."""
        return self.p.num_vars - 1

    @cached_property
    def p_tilde(self) -> Polynomial:
        return substitute_linear(self.p, self.M)

    def restriction(self, x: Sequence[Number], v: Sequence[Number]) -> UniPoly:
        """p~(x + t v) as p(Mx + t Mv), without expanding p~."""
        return univariate_restriction(self.p, self.M.apply(x), self.M.apply(v))

    @cached_property
    def _integer_p(self) -> IntegerForm:
        return IntegerForm(self.p)

    @cached_property
    def _integer_M(self) -> IntegerMap:
        return self.M.to_integer()

    def scaled_restriction(self, x: Sequence[int], v: Sequence[int]) -> list[int]:
        """
        Integer coefficients of a positive multiple of restriction(x, v), for
        integer x and v; p is homogeneous, so scaling M keeps the roots.
        """
        m = self._integer_M
        return self._integer_p.restriction(m.apply(x), m.apply(v))

    def positive_on_scaled_sphere(self, u: Sequence[Number]) -> bool:
        """
        p(|u|, eps u) > 0 for u != 0, decided exactly.

        With s = |u| and r = s^2 the value is s r (1 - 3 eps^2) + 2 eps^3 q(u) / l.
        """
        r = sum((Fraction(c) ** 2 for c in u), Fraction(0))
        if r == 0:
            raise GadgetError("positivity is checked at nonzero points only")
        # p(0, u) is exactly 2 q(u) / l
        q_part = evaluate(self.p, [0, *u])
        eps = self.epsilon
        a = r * (1 - 3 * eps * eps)
        b = eps**3 * q_part
        if b >= 0:
            return True
        # need s > -b / a
        return compare_to_sqrt(-b / a, r) < 0

    def variable_names(self) -> list[str]:
        labels = [f"x{i}" for i in range(self.graph.n)]
        labels += [f"y{i}_{j}" for i, j in self.graph.edges]
        return [f"z[{x}]" for x in labels] + [f"w[{x}]" for x in labels]


def build_stability_gadget(
    graph: Graph,
    k: int,
    *,
    epsilon: Number | None = None,
) -> StabilityGadget:
    n = graph.n
    if n < 2 or not 2 <= k <= n:
        raise GadgetError(f"stability gadget needs 2 <= k <= n, got k={k}, n={n}")

    q = build_q_G(graph)
    m = q.num_vars
    ell = ell_of_k(m, k)

    # p in variables (x0, q's variables shifted by one)
    total = m + 1
    x0 = Monomial.var(0)
    terms: dict[Monomial, Fraction] = {Monomial.var(0, 3): Fraction(1)}
    for i in range(1, total):
        terms[x0 * Monomial.var(i, 2)] = Fraction(-3)
    scaled = 2 / ell
    for mono in q.terms:
        terms[mono.shift(1)] = scaled
    p = Polynomial(total, terms)

    n_coeff = scaled if graph.num_edges else Fraction(0)
    bound = _epsilon_bound(n_coeff, m)
    if epsilon is None:
        eps = default_epsilon(bound)
    else:
        eps = Fraction(epsilon)
        if not 0 < eps < bound:
            raise GadgetError(f"epsilon must satisfy 0 < eps < {bound}, got {eps}")

    columns = []
    for sign in (1, -1):
        for i in range(1, total):
            col = [Fraction(0)] * total
            col[0] = Fraction(1)
            col[i] = sign * eps
            columns.append(col)
    M = LinearMap.from_columns(columns)

    logger.info(
        "stability gadget n=%d |E|=%d k=%d: ell=%s N=%s eps=%s",
        n, graph.num_edges, k, ell, n_coeff, eps,
    )
    return StabilityGadget(graph=graph, k=k, ell=ell, p=p, N=n_coeff, epsilon=eps, M=M)
