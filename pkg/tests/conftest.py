import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from itertools import combinations

import pytest

from lorentzian.services.gadgets.graphs import Graph
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.polynomial import Polynomial

FIXTURES = ROOT / "tests" / "fixtures"


# ----------------------------
# Polynomial helpers
# ----------------------------
def build_poly(num_vars: int, terms: dict) -> Polynomial:
    """Build from {index tuple: coefficient}, e.g. {(0, 0): 1, (0, 1): 2}."""
    return Polynomial(num_vars, {Monomial.from_indices(k): c for k, c in terms.items()})


def build_elementary(d: int, n: int) -> Polynomial:
    return build_poly(n, {c: 1 for c in combinations(range(n), d)})


@pytest.fixture
def poly():
    return build_poly


@pytest.fixture
def elementary():
    return build_elementary


# ----------------------------
# Shared graphs
# ----------------------------
@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def p3() -> Graph:
    return Graph.path(3)


@pytest.fixture
def k3() -> Graph:
    return Graph.complete(3)


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
