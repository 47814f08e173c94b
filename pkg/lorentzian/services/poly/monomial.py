from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Monomial:
    """
    Product of variable powers, stored as sorted (variable, exponent) pairs.

    Exponents are always positive; the empty tuple is the constant monomial 1.
    """

    powers: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, exponents: Mapping[int, int] | None = None) -> "Monomial":
        exponents = exponents or {}
        for var, exp in exponents.items():
            if var < 0:
                raise ValueError(f"negative variable index {var}")
            if exp < 0:
                raise ValueError(f"negative exponent {exp} on variable {var}")
        return cls(tuple(sorted((v, e) for v, e in exponents.items() if e != 0)))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Monomial":
        return cls.of({i: e for i, e in enumerate(exponents)})

    @classmethod
    def var(cls, index: int, exponent: int = 1) -> "Monomial":
        return cls.of({index: exponent})

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Monomial":
        """Monomial x_{i1} x_{i2} ... from a multiset of variable indices."""
        counts: dict[int, int] = {}
        for i in indices:
            counts[i] = counts.get(i, 0) + 1
        return cls.of(counts)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    def exponent(self, var: int) -> int:
        for v, e in self.powers:
            if v == var:
                return e
        return 0

    def variables(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.powers)

    def as_dict(self) -> dict[int, int]:
        return dict(self.powers)

    def indices(self) -> tuple[int, ...]:
        """The variable multiset, e.g. x0^2 x3 -> (0, 0, 3)."""
        return tuple(v for v, e in self.powers for _ in range(e))

    def max_var(self) -> int:
        return self.powers[-1][0] if self.powers else -1

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # graded, then lexicographic on the index multiset
        return (self.degree, self.indices())

    def shift(self, offset: int) -> "Monomial":
        return Monomial(tuple((v + offset, e) for v, e in self.powers))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other.powers:
            return self
        if not self.powers:
            return other
        merged = dict(self.powers)
        for v, e in other.powers:
            merged[v] = merged.get(v, 0) + e
        return Monomial(tuple(sorted(merged.items())))

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return " ".join(f"x{v}^{e}" for v, e in self.powers)
