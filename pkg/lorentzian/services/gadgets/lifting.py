from __future__ import annotations

from lorentzian.services.gadgets.graphs import GadgetError
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.operations import has_nonneg_coeffs, is_homogeneous
from lorentzian.services.poly.polynomial import Polynomial


def _lift(p: Polynomial, extra: int) -> Polynomial:
    # multiply by v^extra where v is a new last variable
    total = p.num_vars + 1
    factor = Monomial.var(p.num_vars, extra)
    return Polynomial(total, {mono * factor: c for mono, c in p.terms.items()})


def lift_degree_stability(p: Polynomial, d: int) -> Polynomial:
    """y^(d-3) p with y appended last; p itself when d = 3."""
    homogeneous, degree = is_homogeneous(p)
    if not homogeneous or degree != 3:
        raise GadgetError(f"expected a homogeneous cubic, got degree {p.degree}")
    if d < 3:
        raise GadgetError(f"target degree must be >= 3, got {d}")
    return p if d == 3 else _lift(p, d - 3)


def lift_degree_lc(f: Polynomial, d: int) -> Polynomial:
    """z^(d-4) f with z appended last; f itself when d = 4."""
    homogeneous, degree = is_homogeneous(f)
    if not homogeneous or degree != 4:
        raise GadgetError(f"expected a homogeneous quartic, got degree {f.degree}")
    if not has_nonneg_coeffs(f):
        raise GadgetError("expected nonnegative coefficients")
    if d < 4:
        raise GadgetError(f"target degree must be >= 4, got {d}")
    return f if d == 4 else _lift(f, d - 4)
