from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from lorentzian.services.linalg.univariate import (
    LinalgError,
    Number,
    UniPoly,
    root_count_with_multiplicity,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Inertia:
    n_pos: int
    n_zero: int
    n_neg: int

    @property
    def n(self) -> int:
        return self.n_pos + self.n_zero + self.n_neg

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_pos, self.n_zero, self.n_neg)


@dataclass(frozen=True)
class SymMatrix:
    """
    Symmetric matrix of exact rationals.

    Only the upper triangle is stored: upper[i][j - i] is entry (i, j), j >= i.
    """

    n: int
    upper: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "SymMatrix":
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise LinalgError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if Fraction(rows[i][j]) != Fraction(rows[j][i]):
                    raise LinalgError(f"matrix is not symmetric at ({i}, {j})")
        upper = tuple(tuple(Fraction(rows[i][j]) for j in range(i, n)) for i in range(n))
        return cls(n=n, upper=upper)

    @classmethod
    def zeros(cls, n: int) -> "SymMatrix":
        return cls(n=n, upper=tuple((Fraction(0),) * (n - i) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[Number]) -> "SymMatrix":
        n = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        if i > j:
            i, j = j, i
        return self.upper[i][j - i]

    def rows(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        if other.n != self.n:
            raise LinalgError(f"size mismatch: {self.n} vs {other.n}")
        return SymMatrix(
            n=self.n,
            upper=tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.upper, other.upper)
            ),
        )

    def scale(self, factor: Number) -> "SymMatrix":
        return SymMatrix(
            n=self.n,
            upper=tuple(tuple(a * factor for a in row) for row in self.upper),
        )

    def congruent(self, s: Sequence[Sequence[Number]]) -> "SymMatrix":
        """S^T A S for a square matrix S given by rows."""
        a = self.rows()
        n = self.n
        if len(s) != n or any(len(row) != n for row in s):
            raise LinalgError("congruence matrix must be square of the same size")
        a_s = [[sum(a[i][k] * s[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        return SymMatrix.from_rows(
            [[sum(s[k][i] * a_s[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        )


# -------------------------------------------------
# Inertia by symmetric congruence elimination
# -------------------------------------------------
def _integer_rows(a: SymMatrix) -> list[list[int]]:
    # positive scaling preserves inertia
    denom = math.lcm(*(x.denominator for row in a.upper for x in row)) if a.n else 1
    return [[int(a[i, j] * denom) for j in range(a.n)] for i in range(a.n)]


def _strip_content(b: list[list[int]]) -> list[list[int]]:
    content = math.gcd(*(x for row in b for x in row)) if b else 0
    if content <= 1:
        return b
    return [[x // content for x in row] for row in b]


def inertia(a: SymMatrix) -> Inertia:
    """Eigenvalue sign counts of a symmetric rational matrix."""
    return integer_inertia(_integer_rows(a))


def integer_inertia(rows: Sequence[Sequence[int]]) -> Inertia:
    """
    Eigenvalue sign counts of a symmetric integer matrix given as full rows.

    The working matrix is always a positive multiple of the current Schur
    complement, kept integral by fraction-free updates and content stripping.
    A nonzero diagonal pivot contributes its sign; when the whole remaining
    diagonal is zero, a nonzero off-diagonal pair forms a hyperbolic 2x2
    block contributing one positive and one negative eigenvalue.
    """
    n = len(rows)
    b = [list(row) for row in rows]
    n_pos = n_neg = 0

    while b:
        m = len(b)
        pivot = None
        for i in range(m):
            if b[i][i] != 0 and (pivot is None or abs(b[i][i]) < abs(b[pivot][pivot])):
                pivot = i

        if pivot is not None:
            p = b[pivot][pivot]
            sign = 1 if p > 0 else -1
            if sign > 0:
                n_pos += 1
            else:
                n_neg += 1
            rest = [k for k in range(m) if k != pivot]
            col = [b[k][pivot] for k in rest]
            b = [
                [sign * (p * b[k][l] - col[ki] * col[li]) for li, l in enumerate(rest)]
                for ki, k in enumerate(rest)
            ]
            b = _strip_content(b)
            continue

        pair = next(
            ((i, j) for i in range(m) for j in range(i + 1, m) if b[i][j] != 0),
            None,
        )
        if pair is None:
            # remaining block is zero
            break

        i, j = pair
        h = b[i][j]
        sign = 1 if h > 0 else -1
        n_pos += 1
        n_neg += 1
        rest = [k for k in range(m) if k not in (i, j)]
        ci = [b[k][i] for k in rest]
        cj = [b[k][j] for k in rest]
        b = [
            [
                sign * (h * b[k][l] - (ci[ki] * cj[li] + cj[ki] * ci[li]))
                for li, l in enumerate(rest)
            ]
            for ki, k in enumerate(rest)
        ]
        b = _strip_content(b)

    return Inertia(n_pos=n_pos, n_zero=n - n_pos - n_neg, n_neg=n_neg)


# -------------------------------------------------
# Cross-check oracle: characteristic polynomial + Sturm
# -------------------------------------------------
CHARPOLY_LIMIT = 8


def inertia_by_charpoly(a: SymMatrix) -> Inertia:
    """
    Sign counts from the characteristic polynomial (sympy) and exact root
    counting. Slow; kept as an independent oracle for small matrices.
    """
    if a.n > CHARPOLY_LIMIT:
        raise LinalgError(f"charpoly oracle limited to n <= {CHARPOLY_LIMIT}, got {a.n}")
    if a.n == 0:
        return Inertia(0, 0, 0)

    lam = sympy.Symbol("lam")
    mat = sympy.Matrix(
        [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in a.rows()]
    )
    high_to_low = mat.charpoly(lam).all_coeffs()
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(high_to_low)]

    n_zero = next(i for i, c in enumerate(coeffs) if c != 0)
    reduced = UniPoly(coeffs[n_zero:])
    n_pos = root_count_with_multiplicity(reduced, (0, None)) if reduced.degree > 0 else 0
    logger.debug("charpoly inertia n=%d: pos=%d zero=%d", a.n, n_pos, n_zero)
    return Inertia(n_pos=n_pos, n_zero=n_zero, n_neg=a.n - n_pos - n_zero)
