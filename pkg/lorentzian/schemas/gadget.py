from pydantic import BaseModel

from lorentzian.models.enums import Construction


class GadgetSidecar(BaseModel):
    """Provenance written next to a serialized gadget polynomial."""

    construction: Construction
    n: int
    num_edges: int
    k: int | None = None
    ell: str | None = None
    N: str | None = None
    epsilon: str | None = None
    gamma: str | None = None
    degree: int
    num_vars: int
    variable_names: list[str]
