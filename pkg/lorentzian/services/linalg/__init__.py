from lorentzian.services.linalg.matrix import (
    Inertia,
    SymMatrix,
    inertia,
    inertia_by_charpoly,
    integer_inertia,
)
from lorentzian.services.linalg.radicals import ceil_of_scaled_sqrt, compare_to_sqrt
from lorentzian.services.linalg.univariate import (
    LinalgError,
    UniPoly,
    integer_is_real_rooted,
    is_real_rooted,
    real_root_count,
    root_count_with_multiplicity,
    square_free_part,
    sturm_chain,
)

__all__ = [
    "Inertia",
    "LinalgError",
    "SymMatrix",
    "UniPoly",
    "ceil_of_scaled_sqrt",
    "compare_to_sqrt",
    "inertia",
    "inertia_by_charpoly",
    "integer_inertia",
    "integer_is_real_rooted",
    "is_real_rooted",
    "real_root_count",
    "root_count_with_multiplicity",
    "square_free_part",
    "sturm_chain",
]
