import pytest

from lorentzian.models.enums import Construction
from lorentzian.services.gadgets.graphs import GadgetError
from lorentzian.services.gadgets.lifting import lift_degree_lc, lift_degree_stability
from lorentzian.services.gadgets.quartic import build_quartic_lc_gadget
from lorentzian.services.gadgets.serialize import bundle_gadget, read_bundle, write_bundle
from lorentzian.services.gadgets.stability import build_stability_gadget
from lorentzian.services.directional import build_directional_gadget, build_graph_directional_gadget
from lorentzian.services.lorentzian_check import is_lorentzian
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.operations import is_homogeneous


def test_lift_stability_appends_variable(elementary):
    f = elementary(3, 4)
    lifted = lift_degree_stability(f, 5)

    assert lifted.num_vars == 5
    assert is_homogeneous(lifted) == (True, 5)
    assert lifted.coefficient(Monomial.from_indices((0, 1, 2, 4, 4))) == 1
    assert lift_degree_stability(f, 3) is f


def test_lifting_preserves_lorentzian(elementary):
    assert is_lorentzian(lift_degree_stability(elementary(3, 4), 5)).is_lorentzian


def test_lift_stability_errors(elementary):
    with pytest.raises(GadgetError):
        lift_degree_stability(elementary(3, 4), 2)
    with pytest.raises(GadgetError):
        lift_degree_stability(elementary(2, 4), 4)


def test_lift_lc(elementary, poly):
    f = elementary(4, 4)
    lifted = lift_degree_lc(f, 6)

    assert lifted.num_vars == 5
    assert lifted.coefficient(Monomial.from_indices((0, 1, 2, 3, 4, 4))) == 1
    assert lift_degree_lc(f, 4) is f

    with pytest.raises(GadgetError):
        lift_degree_lc(f, 3)
    with pytest.raises(GadgetError):
        lift_degree_lc(poly(2, {(0, 0, 1, 1): -1}), 5)


# -------------------------------------------------
# Bundles
# -------------------------------------------------
def test_stability_bundle_sidecar(p3):
    bundle = bundle_gadget(build_stability_gadget(p3, 2))
    sidecar = bundle.sidecar

    assert sidecar.construction == Construction.STABILITY
    assert sidecar.ell == "39/200"
    assert sidecar.N == "400/39"
    assert sidecar.epsilon == "1/10000"
    assert sidecar.num_vars == 10
    assert sidecar.degree == 3
    assert len(sidecar.variable_names) == 10


def test_lifted_quartic_bundle(k3):
    bundle = bundle_gadget(build_quartic_lc_gadget(k3, 2), degree=5)

    assert bundle.sidecar.degree == 5
    assert bundle.sidecar.variable_names[-1] == "v"
    assert bundle.polynomial.num_vars == 8


def test_directional_bundle_rules(p3, poly):
    bundle = bundle_gadget(build_graph_directional_gadget(p3, 2))

    assert bundle.sidecar.construction == Construction.DIRECTIONAL
    assert bundle.sidecar.num_vars == 6

    with pytest.raises(GadgetError):
        bundle_gadget(build_graph_directional_gadget(p3, 2), degree=4)
    with pytest.raises(GadgetError):
        bundle_gadget(build_directional_gadget(poly(2, {(0, 0, 1): 1})))


def test_bundle_file_round_trip(tmp_path, p3):
    bundle = bundle_gadget(build_stability_gadget(p3, 2))
    path = str(tmp_path / "p3.poly")

    write_bundle(bundle, path)
    loaded = read_bundle(path)

    assert loaded.polynomial == bundle.polynomial
    assert loaded.sidecar == bundle.sidecar
