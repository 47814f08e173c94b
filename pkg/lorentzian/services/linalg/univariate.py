from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction


class LinalgError(ValueError):
    """Raised when an exact linear-algebra routine gets an invalid input."""


def _strip(coefficients: Iterable[Number]) -> tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class UniPoly:
    """
    Univariate polynomial with exact rational coefficients.

    coefficients[i] is the coefficient of t**i; trailing zeros are stripped,
    so the zero polynomial has an empty tuple.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Number] = ()):
        object.__setattr__(self, "coefficients", _strip(coefficients))

    @classmethod
    def monomial(cls, degree: int, coefficient: Number = 1) -> "UniPoly":
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_roots(cls, roots: Sequence[Number]) -> "UniPoly":
        result = cls([1])
        for r in roots:
            result = result * cls([-Fraction(r), 1])
        return result

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, t: Number) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * t + c
        return value

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return UniPoly(res)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coefficients)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly | Number") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coefficients)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        res = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                res[i + j] += a * b
        return UniPoly(res)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        result = UniPoly([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coefficients) if i)

    def divmod(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if divisor.is_zero():
            raise LinalgError("division by the zero polynomial")
        rem = list(self.coefficients)
        db = divisor.degree
        lc = divisor.leading_coefficient
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            shift = len(rem) - 1 - db
            factor = rem[-1] / lc
            quot[shift] = factor
            for i, c in enumerate(divisor.coefficients):
                rem[shift + i] -= factor * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "UniPoly") -> "UniPoly":
        return self.divmod(divisor)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.leading_coefficient)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return " + ".join(parts)


def gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def square_free_part(p: UniPoly) -> UniPoly:
    if p.is_zero():
        raise LinalgError("square-free part of the zero polynomial")
    if p.degree < 1:
        return p
    return p // gcd(p, p.derivative())


# -------------------------------------------------
# Integer Sturm chains (pseudo-remainders + content stripping)
# -------------------------------------------------
def _integer_coefficients(p: UniPoly) -> list[int]:
    denom = math.lcm(*(c.denominator for c in p.coefficients))
    ints = [int(c * denom) for c in p.coefficients]
    return _primitive(ints)


def _primitive(coeffs: list[int]) -> list[int]:
    content = math.gcd(*coeffs)
    if content <= 1:
        return coeffs
    return [c // content for c in coeffs]


def _positive_prem(a: list[int], b: list[int]) -> list[int]:
    # Remainder of a by b scaled by a positive factor, so signs are preserved.
    rem = list(a)
    db = len(b) - 1
    lc = b[-1]
    scale = abs(lc)
    sign = 1 if lc > 0 else -1
    while rem and len(rem) - 1 >= db:
        shift = len(rem) - 1 - db
        lead = rem[-1]
        rem = [scale * c for c in rem]
        for i, c in enumerate(b):
            rem[shift + i] -= lead * sign * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def sturm_chain(p: UniPoly) -> list[list[int]]:
    """
    Sturm sequence of p with integer coefficients (low degree first).

    Every element is a positive multiple of the classical signed-remainder
    element, so sign variation counts are unchanged.
    """
    if p.is_zero():
        raise LinalgError("Sturm chain of the zero polynomial")
    chain = [_integer_coefficients(p)]
    if p.degree < 1:
        return chain
    chain.append(_integer_coefficients(p.derivative()))
    while True:
        rem = _positive_prem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append(_primitive([-c for c in rem]))
    return chain


def _sign_at(coeffs: list[int], point: Fraction | None, side: int) -> int:
    if point is None:
        lead = coeffs[-1]
        s = 1 if lead > 0 else -1
        if side < 0 and (len(coeffs) - 1) % 2 == 1:
            s = -s
        return s
    num, den = point.numerator, point.denominator
    deg = len(coeffs) - 1
    value = 0
    for i, c in enumerate(coeffs):
        value += c * num**i * den ** (deg - i)
    return (value > 0) - (value < 0)


def _variations(chain: list[list[int]], point: Fraction | None, side: int) -> int:
    signs = [s for s in (_sign_at(c, point, side) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_root_count(
    p: UniPoly,
    interval: tuple[Number | None, Number | None] | None = None,
) -> int:
    """
    Number of distinct real roots of p in (a, b]; the whole line when no
    interval is given. None as an endpoint means -inf / +inf.
    """
    if p.is_zero():
        raise LinalgError("real_root_count of the zero polynomial")
    s = square_free_part(p)
    if s.degree < 1:
        return 0
    chain = sturm_chain(s)
    a, b = interval if interval is not None else (None, None)
    a = None if a is None else Fraction(a)
    b = None if b is None else Fraction(b)
    if a is not None and b is not None and a >= b:
        return 0
    return _variations(chain, a, -1) - _variations(chain, b, 1)


def _discriminant_low_degree(coeffs: Sequence[Number]) -> Number:
    if len(coeffs) == 3:
        c, b, a = coeffs
        return b * b - 4 * a * c
    d, c, b, a = coeffs
    return (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b * b * c * c
        - 4 * a * c**3
        - 27 * a * a * d * d
    )


def is_real_rooted(p: UniPoly) -> bool:
    """All complex roots of p are real (counted with multiplicity)."""
    if p.is_zero():
        raise LinalgError("is_real_rooted of the zero polynomial")
    if p.degree <= 1:
        return True
    if p.degree <= 3:
        # sign of the discriminant decides for quadratics and cubics
        return _discriminant_low_degree(p.coefficients) >= 0
    s = square_free_part(p)
    return real_root_count(s) == s.degree


def integer_is_real_rooted(coefficients: Sequence[int]) -> bool:
    """is_real_rooted for integer coefficients (low degree first), without Fractions up to degree 3."""
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise LinalgError("is_real_rooted of the zero polynomial")
    if len(coeffs) <= 2:
        return True
    if len(coeffs) <= 4:
        return _discriminant_low_degree(coeffs) >= 0
    return is_real_rooted(UniPoly(coeffs))


def root_count_with_multiplicity(
    p: UniPoly,
    interval: tuple[Number | None, Number | None] | None = None,
) -> int:
    """Roots of p in (a, b] counted with multiplicity, via gcd(p, p') peeling."""
    if p.is_zero():
        raise LinalgError("root count of the zero polynomial")
    total = 0
    g = p
    while g.degree > 0:
        total += real_root_count(g, interval)
        g = gcd(g, g.derivative())
    return total
