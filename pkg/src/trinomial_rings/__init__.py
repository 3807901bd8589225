"""Graded trinomial algebras of complexity one and their Cox ring presentations."""

from .abgroup import INFINITE, FgAbGroup, GroupElement, element_order, quotient_group
from .coxring import (
    CoxPresentation,
    DowngradeData,
    InadmissibleError,
    build,
    check_admissible,
    degrees_pairwise_distinct,
    isotropy_order,
    surface_recipe,
)
from .lattice import IntMatrix, SmithDecomposition, smith_normal_form
from .polynomial import ANY_DEGREE, SparsePoly
from .trinomial import (
    RingPresentation,
    TripleData,
    is_factorial,
    is_sincere,
    pointedness_witness,
    presentation,
    validate,
)

__all__ = [
    "ANY_DEGREE", "INFINITE", "CoxPresentation", "DowngradeData", "FgAbGroup",
    "GroupElement", "InadmissibleError", "IntMatrix", "RingPresentation",
    "SmithDecomposition", "SparsePoly", "TripleData", "build", "check_admissible",
    "degrees_pairwise_distinct", "element_order", "is_factorial", "is_sincere",
    "isotropy_order", "pointedness_witness", "presentation", "quotient_group",
    "smith_normal_form", "surface_recipe", "validate",
]
