import math
import random
from fractions import Fraction

import pytest

from lorentzian.services.linalg.matrix import (
    CHARPOLY_LIMIT,
    Inertia,
    SymMatrix,
    inertia,
    inertia_by_charpoly,
    integer_inertia,
)
from lorentzian.services.linalg.radicals import ceil_of_scaled_sqrt, compare_to_sqrt
from lorentzian.services.linalg.univariate import LinalgError


def test_from_rows_requires_symmetry():
    with pytest.raises(LinalgError):
        SymMatrix.from_rows([[1, 2], [3, 4]])


def test_indexing_is_symmetric():
    a = SymMatrix.from_rows([[1, 2], [2, 5]])

    assert a[0, 1] == a[1, 0] == 2
    assert a.rows() == [[1, 2], [2, 5]]


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 0], [0, 1]], (2, 0, 0)),
        ([[0, 1], [1, 0]], (1, 0, 1)),
        ([[0, 0], [0, 0]], (0, 2, 0)),
        ([[1, 1], [1, 1]], (1, 1, 0)),
        ([[0, 1, 1], [1, 0, 1], [1, 1, 0]], (1, 0, 2)),
        ([[0, 3, 2], [3, 0, 1], [2, 1, 0]], (1, 0, 2)),
        ([[2, 0, 0], [0, -3, 0], [0, 0, 0]], (1, 1, 1)),
    ],
)
def test_inertia_examples(rows, expected):
    a = SymMatrix.from_rows(rows)

    assert inertia(a).as_tuple() == expected
    assert inertia_by_charpoly(a).as_tuple() == expected


def test_inertia_of_empty_matrix():
    assert inertia(SymMatrix.zeros(0)) == Inertia(0, 0, 0)


def test_inertia_with_rational_entries():
    a = SymMatrix.from_rows([[Fraction(1, 3), Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 5)]])

    # det = 1/15 - 1/4 < 0
    assert inertia(a).as_tuple() == (1, 0, 1)


def test_inertia_is_congruence_invariant():
    a = SymMatrix.from_rows([[2, 1, 0], [1, -1, 3], [0, 3, 0]])
    s = [[1, 2, 0], [0, 1, -1], [3, 0, 1]]

    assert inertia(a.congruent(s)) == inertia(a)


def test_scale_flips_inertia():
    a = SymMatrix.diagonal([1, -2, 3])

    assert inertia(a.scale(-1)).as_tuple() == (1, 0, 2)


def test_integer_inertia_matches_rational_path():
    rng = random.Random(11)
    for _ in range(20):
        a = _random_symmetric(rng, rng.randint(1, 6))
        denom = math.lcm(*(x.denominator for row in a.rows() for x in row))
        rows = [[int(x * denom) for x in row] for row in a.rows()]

        assert integer_inertia(rows) == inertia(a)


def _random_symmetric(rng: random.Random, n: int) -> SymMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            value = Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < 0.7 else Fraction(0)
            rows[i][j] = rows[j][i] = value
    return SymMatrix.from_rows(rows)


def test_inertia_agrees_with_charpoly_on_random_matrices():
    rng = random.Random(7)
    for _ in range(40):
        a = _random_symmetric(rng, rng.randint(1, CHARPOLY_LIMIT))
        assert inertia(a) == inertia_by_charpoly(a)


def test_low_rank_matrix_agrees_with_charpoly():
    # v v^T - w w^T has inertia (1, n - 2, 1)
    v = [1, 2, 0, 1]
    w = [0, 1, 1, 3]
    rows = [[v[i] * v[j] - w[i] * w[j] for j in range(4)] for i in range(4)]
    a = SymMatrix.from_rows(rows)

    assert inertia(a).as_tuple() == (1, 2, 1)
    assert inertia_by_charpoly(a).as_tuple() == (1, 2, 1)


def test_charpoly_limit():
    with pytest.raises(LinalgError):
        inertia_by_charpoly(SymMatrix.zeros(CHARPOLY_LIMIT + 1))


# -------------------------------------------------
# Radicals
# -------------------------------------------------
def test_ceil_of_scaled_sqrt():
    assert ceil_of_scaled_sqrt(Fraction(1, 27), 200) == 39
    assert ceil_of_scaled_sqrt(4, 3) == 6
    assert ceil_of_scaled_sqrt(0, 5) == 0
    assert ceil_of_scaled_sqrt(2, 1) == 2

    with pytest.raises(LinalgError):
        ceil_of_scaled_sqrt(-1, 2)
    with pytest.raises(LinalgError):
        ceil_of_scaled_sqrt(1, 0)


def test_compare_to_sqrt():
    assert compare_to_sqrt(Fraction(39, 200), Fraction(1, 27)) == 1
    assert compare_to_sqrt(Fraction(38, 200), Fraction(1, 27)) == -1
    assert compare_to_sqrt(Fraction(3, 2), Fraction(9, 4)) == 0
    assert compare_to_sqrt(-1, 0) == -1

    with pytest.raises(LinalgError):
        compare_to_sqrt(1, -1)
