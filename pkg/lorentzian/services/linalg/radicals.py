"""
Exact comparisons against square roots of rationals.

Everything is decided by integer / rational squaring; no floating point.
"""

import math
from fractions import Fraction

from lorentzian.services.linalg.univariate import LinalgError, Number


def ceil_of_scaled_sqrt(c: Number, m: int) -> int:
    """Least integer t with t >= m * sqrt(c)."""
    c = Fraction(c)
    if c < 0:
        raise LinalgError(f"ceil_of_scaled_sqrt needs c >= 0, got {c}")
    if m <= 0:
        raise LinalgError(f"ceil_of_scaled_sqrt needs m > 0, got {m}")

    target = m * m * c
    t = math.isqrt(math.floor(target))
    # isqrt(floor(target)) is either the answer or one below it
    if t * t < target:
        t += 1
    return t


def compare_to_sqrt(r: Number, c: Number) -> int:
    """Sign of r - sqrt(c): -1, 0 or 1."""
    r = Fraction(r)
    c = Fraction(c)
    if c < 0:
        raise LinalgError(f"compare_to_sqrt needs c >= 0, got {c}")
    if r < 0:
        return -1
    square = r * r
    return (square > c) - (square < c)
