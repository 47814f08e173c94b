from __future__ import annotations

import json
from dataclasses import dataclass

from lorentzian.models.enums import Construction
from lorentzian.schemas.gadget import GadgetSidecar
from lorentzian.services.directional import DirectionalGadget
from lorentzian.services.gadgets.graphs import GadgetError
from lorentzian.services.gadgets.lifting import lift_degree_lc, lift_degree_stability
from lorentzian.services.gadgets.quartic import QuarticGadget
from lorentzian.services.gadgets.stability import StabilityGadget
from lorentzian.services.poly.polynomial import Polynomial
from lorentzian.utils.poly_format import format_polynomial, parse_polynomial

Gadget = StabilityGadget | QuarticGadget | DirectionalGadget


@dataclass(frozen=True)
class GadgetBundle:
    polynomial: Polynomial
    sidecar: GadgetSidecar


def bundle_gadget(gadget: Gadget, *, degree: int | None = None) -> GadgetBundle:
    """The output polynomial of a gadget (optionally degree-lifted) with its provenance."""
    if isinstance(gadget, StabilityGadget):
        construction = Construction.STABILITY
        poly = gadget.p_tilde
        names = gadget.variable_names()
        if degree is not None and degree != 3:
            poly = lift_degree_stability(poly, degree)
            names = names + ["v"]
        extra = {"ell": str(gadget.ell), "N": str(gadget.N), "epsilon": str(gadget.epsilon)}
    elif isinstance(gadget, QuarticGadget):
        construction = Construction.QUARTIC_LC
        poly = gadget.g
        names = gadget.variable_names()
        if degree is not None and degree != 4:
            poly = lift_degree_lc(poly, degree)
            names = names + ["v"]
        extra = {"N": str(gadget.N), "gamma": str(gadget.gamma)}
    else:
        if gadget.graph is None:
            raise GadgetError("only graph directional gadgets carry provenance")
        if degree is not None and degree != 3:
            raise GadgetError("directional gadgets are cubic; degree lifting does not apply")
        construction = Construction.DIRECTIONAL
        poly = gadget.assembled
        names = gadget.variable_names()
        extra = {"ell": str(gadget.ell)}

    sidecar = GadgetSidecar(
        construction=construction,
        n=gadget.graph.n,
        num_edges=gadget.graph.num_edges,
        k=gadget.k,
        degree=poly.degree or 0,
        num_vars=poly.num_vars,
        variable_names=names,
        **extra,
    )
    return GadgetBundle(polynomial=poly, sidecar=sidecar)


def sidecar_json(sidecar: GadgetSidecar) -> str:
    return json.dumps(sidecar.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"


def write_bundle(bundle: GadgetBundle, path: str) -> None:
    """Write the polynomial to path and the sidecar to path + '.json'."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_polynomial(bundle.polynomial))
    with open(path + ".json", "w", encoding="utf-8") as fh:
        fh.write(sidecar_json(bundle.sidecar))


def read_bundle(path: str) -> GadgetBundle:
    with open(path, encoding="utf-8") as fh:
        poly = parse_polynomial(fh.read(), path=path)
    with open(path + ".json", encoding="utf-8") as fh:
        sidecar = GadgetSidecar.model_validate_json(fh.read())
    return GadgetBundle(polynomial=poly, sidecar=sidecar)
