from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from lorentzian.services.poly.polynomial import Number, PolynomialError


@dataclass(frozen=True)
class LinearMap:
    """Dense rows x cols rational matrix; x_r maps to sum_c entries[r][c] * y_c."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "LinearMap":
        if not rows:
            raise PolynomialError("a linear map needs at least one row")
        cols = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise PolynomialError(f"row {i} has {len(row)} entries, expected {cols}")
        return cls(
            rows=len(rows),
            cols=cols,
            entries=tuple(tuple(Fraction(x) for x in row) for row in rows),
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]]) -> "LinearMap":
        if not columns:
            raise PolynomialError("a linear map needs at least one column")
        n_rows = len(columns[0])
        return cls.from_rows([[col[r] for col in columns] for r in range(n_rows)])

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def apply(self, vector: Sequence[Number]) -> list[Fraction]:
        """M x for x of length cols."""
        if len(vector) != self.cols:
            raise PolynomialError(f"vector has length {len(vector)}, map expects {self.cols}")
        return [sum((a * x for a, x in zip(row, vector) if a), Fraction(0)) for row in self.entries]

    def rank(self) -> int:
        rows = [list(row) for row in self.entries]
        rank = 0
        for col in range(self.cols):
            pivot = next((r for r in range(rank, self.rows) if rows[r][col] != 0), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for r in range(self.rows):
                if r != rank and rows[r][col] != 0:
                    factor = rows[r][col] / rows[rank][col]
                    rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
            rank += 1
        return rank

    def to_integer(self) -> "IntegerMap":
        """L * M with L the least common denominator of the entries, stored sparsely."""
        scale = math.lcm(*(x.denominator for row in self.entries for x in row))
        rows = tuple(
            tuple((c, int(x * scale)) for c, x in enumerate(row) if x) for row in self.entries
        )
        return IntegerMap(scale=scale, cols=self.cols, rows=rows)


@dataclass(frozen=True)
class IntegerMap:
    scale: int
    cols: int
    rows: tuple[tuple[tuple[int, int], ...], ...]

    def apply(self, vector: Sequence[int]) -> list[int]:
        if len(vector) != self.cols:
            raise PolynomialError(f"vector has length {len(vector)}, map expects {self.cols}")
        return [sum(a * vector[c] for c, a in row) for row in self.rows]
