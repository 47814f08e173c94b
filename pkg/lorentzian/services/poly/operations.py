"""
Calculus and structural queries on sparse polynomials.

All functions are pure; inputs are never mutated.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from lorentzian.services.linalg.matrix import SymMatrix
from lorentzian.services.linalg.univariate import UniPoly
from lorentzian.services.poly.linear_map import LinearMap
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.polynomial import Number, Polynomial, PolynomialError


def _check_point(f: Polynomial, point: Sequence[Number], what: str = "point") -> None:
    if len(point) != f.num_vars:
        raise PolynomialError(
            f"{what} has length {len(point)} but the polynomial has {f.num_vars} variables"
        )


def _falling(e: int, a: int) -> int:
    out = 1
    for k in range(a):
        out *= e - k
    return out


# -------------------------------------------------
# Differentiation
# -------------------------------------------------
def differentiate(f: Polynomial, alpha: Monomial | Sequence[int]) -> Polynomial:
    """The partial derivative d^alpha f (alpha as a Monomial or exponent vector)."""
    if not isinstance(alpha, Monomial):
        alpha = Monomial.from_exponents(alpha)
    if alpha.max_var() >= f.num_vars:
        raise PolynomialError(
            f"derivative in x{alpha.max_var()} but the polynomial has {f.num_vars} variables"
        )
    if not alpha.powers:
        return f

    terms: dict[Monomial, Fraction] = {}
    for mono, c in f.items():
        exps = mono.as_dict()
        factor = 1
        for v, a in alpha.powers:
            e = exps.get(v, 0)
            if e < a:
                factor = 0
                break
            factor *= _falling(e, a)
            exps[v] = e - a
        if factor:
            terms[Monomial.of(exps)] = c * factor
    return Polynomial(f.num_vars, terms)


def partial(f: Polynomial, index: int, order: int = 1) -> Polynomial:
    return differentiate(f, Monomial.var(index, order))


def gradient(f: Polynomial) -> list[Polynomial]:
    """All first partials in one pass over the terms."""
    parts: list[dict[Monomial, Fraction]] = [{} for _ in range(f.num_vars)]
    for mono, c in f.terms.items():
        for v, e in mono.powers:
            exps = mono.as_dict()
            exps[v] = e - 1
            lowered = Monomial.of(exps)
            parts[v][lowered] = parts[v].get(lowered, Fraction(0)) + c * e
    return [Polynomial(f.num_vars, terms) for terms in parts]


def directional_derivative(f: Polynomial, direction: Sequence[Number]) -> Polynomial:
    """D_v f = sum_i v_i d_i f for any real direction v."""
    _check_point(f, direction, "direction")
    result = Polynomial.zero(f.num_vars)
    for i, v in enumerate(direction):
        if v != 0:
            result = result + partial(f, i).scale(v)
    return result


def dv_derivative(f: Polynomial, directions: Sequence[Sequence[Number]]) -> Polynomial:
    """
    Apply prod_j (sum_i V_ij d_i) to f, one nonnegative direction at a time.

    An empty list of directions returns f unchanged.
    """
    for j, direction in enumerate(directions):
        _check_point(f, direction, f"direction {j}")
        negative = [i for i, v in enumerate(direction) if Fraction(v) < 0]
        if negative:
            raise PolynomialError(
                f"direction {j} has negative entry at index {negative[0]}"
            )
    result = f
    for direction in directions:
        result = directional_derivative(result, direction)
    return result


# -------------------------------------------------
# Evaluation / substitution
# -------------------------------------------------
def evaluate(f: Polynomial, point: Sequence[Number]) -> Fraction:
    _check_point(f, point)
    pts = [Fraction(x) for x in point]
    total = Fraction(0)
    for mono, c in f.items():
        value = c
        for v, e in mono.powers:
            value *= pts[v] ** e
        total += value
    return total


def substitute_linear(f: Polynomial, linear_map: LinearMap) -> Polynomial:
    """f(M y) expanded in linear_map.cols variables."""
    if linear_map.rows != f.num_vars:
        raise PolynomialError(
            f"map has {linear_map.rows} rows but the polynomial has {f.num_vars} variables"
        )
    images = [
        Polynomial.linear_form(row) if any(row) else Polynomial.zero(linear_map.cols)
        for row in linear_map.entries
    ]
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(var: int, exp: int) -> Polynomial:
        key = (var, exp)
        if key not in powers:
            powers[key] = images[var] if exp == 1 else power(var, exp - 1) * images[var]
        return powers[key]

    result = Polynomial.zero(linear_map.cols)
    for mono, c in f.items():
        term = Polynomial.constant(linear_map.cols, c)
        for v, e in mono.powers:
            term = term * power(v, e)
        result = result + term
    return result


def univariate_restriction(
    f: Polynomial,
    base: Sequence[Number],
    direction: Sequence[Number],
) -> UniPoly:
    """t -> f(base + t * direction) as an exact univariate polynomial."""
    _check_point(f, base, "base")
    _check_point(f, direction, "direction")
    lines = [UniPoly([b, d]) for b, d in zip(base, direction)]
    powers: dict[tuple[int, int], UniPoly] = {}

    def power(var: int, exp: int) -> UniPoly:
        key = (var, exp)
        if key not in powers:
            powers[key] = lines[var] if exp == 1 else power(var, exp - 1) * lines[var]
        return powers[key]

    result = UniPoly()
    for mono, c in f.items():
        term = UniPoly([c])
        for v, e in mono.powers:
            term = term * power(v, e)
        result = result + term
    return result


# -------------------------------------------------
# Hessians
# -------------------------------------------------
def _second_partials(f: Polynomial) -> Iterator[tuple[int, int, Fraction, tuple[tuple[int, int], ...]]]:
    """(i, j, coefficient, remaining powers) for every term of d_i d_j f, i <= j."""
    for mono, c in f.terms.items():
        powers = mono.powers
        for a, (i, ei) in enumerate(powers):
            for b in range(a, len(powers)):
                j, ej = powers[b]
                if i == j:
                    if ei < 2:
                        continue
                    coeff = c * ei * (ei - 1)
                    drop = {i: 2}
                else:
                    coeff = c * ei * ej
                    drop = {i: 1, j: 1}
                rest = tuple(
                    (v, e - drop.get(v, 0)) for v, e in powers if e - drop.get(v, 0)
                )
                yield i, j, coeff, rest


def hessian_at(f: Polynomial, point: Sequence[Number]) -> SymMatrix:
    """[d_i d_j f](point) with exact entries."""
    _check_point(f, point)
    n = f.num_vars
    pts = [Fraction(x) for x in point]
    acc = [[Fraction(0)] * n for _ in range(n)]

    for i, j, coeff, rest in _second_partials(f):
        value = coeff
        for v, e in rest:
            value *= pts[v] ** e
        acc[i][j] += value

    rows = [[acc[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]
    return SymMatrix.from_rows(rows)


def constant_hessian(f: Polynomial) -> SymMatrix:
    """Hessian of a polynomial of degree <= 2 (independent of the point)."""
    if f.degree is not None and f.degree > 2:
        raise PolynomialError(f"constant Hessian needs degree <= 2, got {f.degree}")
    return hessian_at(f, [0] * f.num_vars)


# -------------------------------------------------
# Structural predicates
# -------------------------------------------------
def is_homogeneous(f: Polynomial) -> tuple[bool, int | None]:
    """
    (homogeneous?, degree). The zero polynomial counts as homogeneous of
    every degree and reports degree None.
    """
    degrees = {m.degree for m in f.terms}
    if not degrees:
        return True, None
    if len(degrees) == 1:
        return True, degrees.pop()
    return False, max(degrees)


def has_nonneg_coeffs(f: Polynomial) -> bool:
    return all(c >= 0 for c in f.coefficients())


def homogenize(f: Polynomial) -> Polynomial:
    """x0^deg f * f(x1/x0, ..., xn/x0) with the new variable x0 first."""
    if f.is_zero():
        raise PolynomialError("cannot homogenize the zero polynomial")
    d = f.degree
    terms = {}
    for mono, c in f.items():
        lifted = mono.shift(1)
        if d - mono.degree:
            lifted = Monomial.var(0, d - mono.degree) * lifted
        terms[lifted] = c
    return Polynomial(f.num_vars + 1, terms)


# -------------------------------------------------
# Integer forms
# -------------------------------------------------
def _times_line(poly: list[int], a: int, b: int) -> list[int]:
    # poly(t) * (a + b t)
    out = [x * a for x in poly]
    out.append(0)
    for k, x in enumerate(poly):
        out[k + 1] += x * b
    return out


class IntegerForm:
    """
    L * f with L the least common denominator of f's coefficients, compiled
    for repeated evaluation at integer points.

    L > 0, so values keep their sign, restrictions keep their roots and
    Hessians keep their inertia.
    """

    __slots__ = ("num_vars", "scale", "degree", "_terms", "_second")

    def __init__(self, f: Polynomial):
        coeffs = f.coefficients()
        self.num_vars = f.num_vars
        self.scale = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        self.degree = f.degree or 0
        self._terms = [(int(c * self.scale), mono.powers) for mono, c in f.terms.items()]
        self._second = [
            (i, j, int(c * self.scale), rest) for i, j, c, rest in _second_partials(f)
        ]

    def value(self, point: Sequence[int]) -> int:
        total = 0
        for c, powers in self._terms:
            for v, e in powers:
                c *= point[v] ** e
            total += c
        return total

    def restriction(self, base: Sequence[int], direction: Sequence[int]) -> list[int]:
        """Coefficients, low degree first, of t -> L f(base + t direction)."""
        total = [0] * (self.degree + 1)
        for c, powers in self._terms:
            poly = [c]
            for v, e in powers:
                a, b = base[v], direction[v]
                for _ in range(e):
                    poly = _times_line(poly, a, b)
            for k, x in enumerate(poly):
                total[k] += x
        return total

    def hessian_rows(self, point: Sequence[int]) -> list[list[int]]:
        """Full rows of the Hessian of L f at an integer point."""
        n = self.num_vars
        rows = [[0] * n for _ in range(n)]
        for i, j, c, rest in self._second:
            for v, e in rest:
                c *= point[v] ** e
            rows[i][j] += c
        for i in range(n):
            for j in range(i + 1, n):
                rows[j][i] = rows[i][j]
        return rows
