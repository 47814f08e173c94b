from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from lorentzian.services.poly.monomial import Monomial

Number = int | Fraction


class PolynomialError(ValueError):
    """Raised on dimension mismatches and invalid polynomial operations."""


class Polynomial:
    """
    Sparse multivariate polynomial with exact rational coefficients.

    Immutable after construction. Zero coefficients are never stored and
    every variable index is < num_vars.
    """

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Monomial, Number] | None = None):
        if num_vars < 0:
            raise PolynomialError(f"num_vars must be >= 0, got {num_vars}")
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            if mono.max_var() >= num_vars:
                raise PolynomialError(
                    f"monomial {mono} uses variable x{mono.max_var()} "
                    f"but num_vars = {num_vars}"
                )
            c = Fraction(coeff)
            if c != 0:
                clean[mono] = c
        self.num_vars = num_vars
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, num_vars: int, terms: dict[Monomial, Fraction]) -> "Polynomial":
        # terms already validated and free of zeros
        poly = cls.__new__(cls)
        poly.num_vars = num_vars
        poly._terms = terms
        poly._hash = None
        return poly

    # -------------------------------------------------
    # Constructors
    # -------------------------------------------------
    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: Number) -> "Polynomial":
        return cls(num_vars, {Monomial(): value})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "Polynomial":
        if not 0 <= index < num_vars:
            raise PolynomialError(f"variable x{index} out of range for {num_vars} variables")
        return cls(num_vars, {Monomial.var(index): 1})

    @classmethod
    def linear_form(cls, coefficients: Iterable[Number]) -> "Polynomial":
        coeffs = list(coefficients)
        return cls(len(coeffs), {Monomial.var(i): c for i, c in enumerate(coeffs) if c != 0})

    # -------------------------------------------------
    # Structure
    # -------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical graded-lexicographic order."""
        for mono in sorted(self._terms, key=Monomial.sort_key):
            yield mono, self._terms[mono]

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def coefficients(self) -> list[Fraction]:
        return list(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        # None for the zero polynomial
        if not self._terms:
            return None
        return max(m.degree for m in self._terms)

    def variables(self) -> set[int]:
        """Indices i with a nonzero partial derivative in x_i."""
        return {v for m in self._terms for v in m.variables()}

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    # -------------------------------------------------
    # Arithmetic
    # -------------------------------------------------
    def _check_same_space(self, other: "Polynomial") -> None:
        if other.num_vars != self.num_vars:
            raise PolynomialError(
                f"variable count mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: "Polynomial | Number") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.num_vars, other)
        self._check_same_space(other)
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            s = terms.get(mono, 0) + c
            if s == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return Polynomial._trusted(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._trusted(self.num_vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | Number") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.num_vars, other)
        return self + (-other)

    def __rsub__(self, other: Number) -> "Polynomial":
        return (-self) + other

    def scale(self, factor: Number) -> "Polynomial":
        factor = Fraction(factor)
        if factor == 0:
            return Polynomial.zero(self.num_vars)
        return Polynomial._trusted(
            self.num_vars, {m: c * factor for m, c in self._terms.items()}
        )

    def __mul__(self, other: "Polynomial | Number") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_same_space(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1 * m2
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Polynomial._trusted(
            self.num_vars, {m: c for m, c in terms.items() if c != 0}
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Polynomial":
        return self.scale(1 / Fraction(other))

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise PolynomialError("negative powers are not polynomials")
        result = Polynomial.constant(self.num_vars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def embed(self, num_vars: int, offset: int = 0) -> "Polynomial":
        """Same polynomial in a larger variable space, x_i renamed x_{i+offset}."""
        if offset < 0 or self.num_vars + offset > num_vars:
            raise PolynomialError(
                f"cannot embed {self.num_vars} variables at offset {offset} "
                f"into {num_vars}"
            )
        return Polynomial._trusted(
            num_vars, {m.shift(offset): c for m, c in self._terms.items()}
        )

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{m}" for m, c in self.items()) or "0"
        return f"Polynomial(num_vars={self.num_vars}, {body})"
