"""
Polynomial-time decision procedures for Lorentzian (completely log-concave)
homogeneous polynomials, plus pointwise log-concavity and convexity checks.

A homogeneous f of degree d with nonnegative coefficients is Lorentzian iff
every nonzero partial derivative of order <= d - 2 is indecomposable and every
nonzero partial of order exactly d - 2 (a quadratic) has a Hessian with
exactly one positive eigenvalue.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from networkx.utils import UnionFind

from lorentzian.models.enums import FailureKind
from lorentzian.services.linalg.matrix import Inertia, SymMatrix, inertia
from lorentzian.services.poly.operations import (
    constant_hessian,
    evaluate,
    gradient,
    has_nonneg_coeffs,
    hessian_at,
    is_homogeneous,
    partial,
)
from lorentzian.services.poly.polynomial import Number, Polynomial

logger = logging.getLogger(__name__)


class LorentzianError(ValueError):
    """Raised when a decision procedure's input violates its preconditions."""


# -------------------------------------------------
# Result types
# -------------------------------------------------
@dataclass(frozen=True)
class FailureWitness:
    alpha: tuple[int, ...]
    kind: FailureKind
    inertia: Inertia | None = None

    def describe(self) -> str:
        text = f"alpha=({','.join(str(a) for a in self.alpha)}): {self.kind.value}"
        if self.inertia is not None:
            text += f" ({self.inertia.n_pos} positive eigenvalues)"
        return text


@dataclass(frozen=True)
class LorentzianVerdict:
    is_lorentzian: bool
    failure_witness: FailureWitness | None = None
    degree: int | None = None
    derivatives_checked: int = 0

    def __post_init__(self) -> None:
        if self.is_lorentzian == (self.failure_witness is not None):
            raise LorentzianError("a witness is present exactly when the verdict is negative")


@dataclass(frozen=True)
class SupportGraph:
    active_vars: frozenset[int]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def is_connected(self) -> bool:
        if len(self.active_vars) <= 1:
            return True
        uf = UnionFind(self.active_vars)
        for i, j in self.edges:
            uf.union(i, j)
        return len(list(uf.to_sets())) == 1


# -------------------------------------------------
# Indecomposability
# -------------------------------------------------
def support_graph(f: Polynomial) -> SupportGraph:
    active: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for mono in f.terms:
        vs = mono.variables()
        active.update(vs)
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                edges.add((vs[a], vs[b]))
    return SupportGraph(active_vars=frozenset(active), edges=frozenset(edges))


def _connected(f: Polynomial) -> bool:
    # union along each monomial's variables; same components as the full edge set
    active = f.variables()
    if len(active) <= 1:
        return True
    uf = UnionFind(active)
    for mono in f.terms:
        vs = mono.variables()
        for v in vs[1:]:
            uf.union(vs[0], v)
    root = uf[next(iter(active))]
    return all(uf[v] == root for v in active)


def is_indecomposable(f: Polynomial) -> bool:
    if f.is_zero():
        raise LorentzianError("indecomposability is undefined for the zero polynomial")
    return _connected(f)


# -------------------------------------------------
# Quadratics
# -------------------------------------------------
def _quadratic_matrix(q: Polynomial) -> SymMatrix:
    """Hessian of a quadratic form restricted to its active variables."""
    active = sorted(q.variables())
    pos = {v: i for i, v in enumerate(active)}
    rows = [[Fraction(0)] * len(active) for _ in active]
    for mono, c in q.terms.items():
        if len(mono.powers) == 1:
            (v, _), = mono.powers
            rows[pos[v]][pos[v]] += 2 * c
        else:
            (u, _), (v, _) = mono.powers
            rows[pos[u]][pos[v]] += c
            rows[pos[v]][pos[u]] += c
    return SymMatrix.from_rows(rows)


def _check_quadratic(f: Polynomial) -> None:
    if f.is_zero():
        raise LorentzianError("quadratic log-concavity is undefined for the zero polynomial")
    homogeneous, degree = is_homogeneous(f)
    if not homogeneous or degree != 2:
        raise LorentzianError(f"expected a homogeneous quadratic, got degree {f.degree}")
    if not has_nonneg_coeffs(f):
        raise LorentzianError("expected nonnegative coefficients")


def quadratic_inertia(f: Polynomial) -> Inertia:
    _check_quadratic(f)
    return inertia(_quadratic_matrix(f))


def quadratic_is_log_concave(f: Polynomial) -> bool:
    return quadratic_inertia(f).n_pos == 1


def quadratic_is_real_stable(f: Polynomial) -> bool:
    """For nonnegative quadratics stability and log-concavity coincide."""
    return quadratic_is_log_concave(f)


# -------------------------------------------------
# Lorentzian decision
# -------------------------------------------------
def _alpha_vector(indices: tuple[int, ...], n: int) -> tuple[int, ...]:
    alpha = [0] * n
    for i in indices:
        alpha[i] += 1
    return tuple(alpha)


def _check_derivative(
    indices: tuple[int, ...], g: Polynomial, final_level: bool
) -> tuple[tuple[int, ...], FailureKind, Inertia | None] | None:
    connected = _connected(g)
    if not final_level:
        return None if connected else (indices, FailureKind.DECOMPOSABLE, None)
    # a split nonnegative quadratic always has n_pos >= 2; a semidefinite
    # one is reported by its inertia, an indefinite one by its split
    inert = inertia(_quadratic_matrix(g))
    if inert.n_pos != 1 and (connected or inert.n_neg == 0):
        return indices, FailureKind.BAD_INERTIA, inert
    if not connected:
        return indices, FailureKind.DECOMPOSABLE, None
    return None


def is_lorentzian(f: Polynomial, *, threads: int = 1) -> LorentzianVerdict:
    """
    Decide whether f is Lorentzian.

    Multi-indices are visited level by level in graded-lexicographic order
    and the least failing one is reported, independent of `threads`. Zero
    partial derivatives are skipped.
    """
    n = f.num_vars
    origin = (0,) * n

    def fail(kind: FailureKind, alpha=origin, inert=None, degree=None, checked=0):
        return LorentzianVerdict(
            is_lorentzian=False,
            failure_witness=FailureWitness(alpha=alpha, kind=kind, inertia=inert),
            degree=degree,
            derivatives_checked=checked,
        )

    if f.is_zero():
        return fail(FailureKind.ZERO)
    if not has_nonneg_coeffs(f):
        return fail(FailureKind.NEGATIVE_COEFFICIENT, degree=f.degree)
    homogeneous, d = is_homogeneous(f)
    if not homogeneous:
        return fail(FailureKind.NOT_HOMOGENEOUS, degree=d)
    if d < 2:
        return LorentzianVerdict(is_lorentzian=True, degree=d)

    checked = 0
    level: dict[tuple[int, ...], Polynomial] = {(): f}
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for order in range(d - 1):
            if order > 0:
                nxt: dict[tuple[int, ...], Polynomial] = {}
                for parent_idx, parent in level.items():
                    start = parent_idx[-1] if parent_idx else 0
                    for v, g in enumerate(gradient(parent)):
                        if v >= start and not g.is_zero():
                            nxt[parent_idx + (v,)] = g
                level = dict(sorted(nxt.items()))

            final_level = order == d - 2
            items = list(level.items())
            checked += len(items)
            logger.debug("order %d: %d nonzero derivatives", order, len(items))

            if executor is None:
                results = (_check_derivative(i, g, final_level) for i, g in items)
            else:
                results = executor.map(lambda item: _check_derivative(*item, final_level), items)
            for result in results:
                if result is not None:
                    idx, kind, inert = result
                    alpha = _alpha_vector(idx, n)
                    logger.debug("failure at alpha=%s: %s", alpha, kind.value)
                    return fail(kind, alpha, inert, d, checked)
    finally:
        if executor is not None:
            executor.shutdown(wait=True, cancel_futures=True)

    return LorentzianVerdict(is_lorentzian=True, degree=d, derivatives_checked=checked)


# -------------------------------------------------
# Cubics
# -------------------------------------------------
def _check_cubic(f: Polynomial) -> None:
    homogeneous, degree = is_homogeneous(f)
    if f.is_zero() or not homogeneous or degree != 3:
        raise LorentzianError(f"expected a homogeneous cubic, got degree {f.degree}")
    if not has_nonneg_coeffs(f):
        raise LorentzianError("expected nonnegative coefficients")


def cubic_log_concavity(f: Polynomial, *, threads: int = 1) -> LorentzianVerdict:
    """A nonnegative cubic is log-concave iff it is completely log-concave."""
    _check_cubic(f)
    return is_lorentzian(f, threads=threads)


def cubic_is_log_concave(f: Polynomial, *, threads: int = 1) -> bool:
    return cubic_log_concavity(f, threads=threads).is_lorentzian


def cubic_hessian_decomposition(f: Polynomial) -> list[SymMatrix]:
    """Constant matrices M_i with hessian(f)(x) = sum_i x_i M_i."""
    homogeneous, degree = is_homogeneous(f)
    if not homogeneous or degree not in (3, None):
        raise LorentzianError(f"expected a homogeneous cubic, got degree {degree}")
    return [constant_hessian(partial(f, i)) for i in range(f.num_vars)]


def combine_hessian(matrices: Sequence[SymMatrix], x: Sequence[Number]) -> SymMatrix:
    if len(matrices) != len(x):
        raise LorentzianError(f"{len(matrices)} matrices but point has length {len(x)}")
    n = matrices[0].n if matrices else 0
    total = SymMatrix.zeros(n)
    for m, xi in zip(matrices, x):
        if xi != 0:
            total = total + m.scale(xi)
    return total


def cubic_vertex_witness(f: Polynomial, index: int, *, max_halvings: int = 64) -> list[Fraction] | None:
    """
    A positive point near e_index where the Hessian of f has at least two
    positive eigenvalues, or None if M_index has at most one.
    """
    _check_cubic(f)
    m = constant_hessian(partial(f, index))
    if inertia(m).n_pos < 2:
        return None
    delta = Fraction(1)
    for _ in range(max_halvings):
        w = [delta + (1 if i == index else 0) for i in range(f.num_vars)]
        if inertia(hessian_at(f, w)).n_pos >= 2:
            return w
        delta /= 2
    return None


# -------------------------------------------------
# Pointwise checks
# -------------------------------------------------
def _check_point_positive(f: Polynomial, w: Sequence[Number]) -> None:
    value = evaluate(f, w)
    if value <= 0:
        raise LorentzianError(f"f(w) = {value} must be positive")


def log_concave_at(f: Polynomial, w: Sequence[Number]) -> bool:
    homogeneous, degree = is_homogeneous(f)
    if not homogeneous or degree is None or degree < 2:
        raise LorentzianError("log_concave_at needs a homogeneous polynomial of degree >= 2")
    if f.num_vars < 2:
        raise LorentzianError("log_concave_at needs at least two variables")
    _check_point_positive(f, w)
    return inertia(hessian_at(f, w)).n_pos == 1


def is_convex_at(f: Polynomial, w: Sequence[Number]) -> bool:
    """Hessian positive semidefinite at w."""
    return inertia(hessian_at(f, w)).n_neg == 0
