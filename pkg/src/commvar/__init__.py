"""Dimensions of commuting and mixed commuting varieties, computed three ways:
closed formulas, Groebner bases of the defining ideals, and F_q point counts.
"""

__version__ = "0.1.0"

from .ring import GF, QQ, CoefficientField, Polynomial, RingDescriptor, polynomial_ring  # noqa: E402
from .groebner import (BudgetExceeded, GroebnerBasis, Ideal, buchberger,  # noqa: E402
                       is_member, krull_dimension, reduce)
from .detvar import (StaircaseShape, detvar_dim_formula, generic_matrix,  # noqa: E402
                     minors_ideal, staircase_dim, xijm_matrix)
from .lie import (MixedSpec, SquareMatrix, VarietySpec, centralizer_basis,  # noqa: E402
                  commutator, commuting_ideal, generic_element, jordan_nilpotent,
                  verify_intersections)
from .formulas import (DimensionReport, N_value, decompose_Cijm, dim_baselines,  # noqa: E402
                       dim_Cijm, dim_Cr_zsub, is_irreducible_Cijm)
from .support import WeightA2, decompose_digits, is_p_regular, support_variety  # noqa: E402
from .pointcount import count_points, dimension_slope, membership  # noqa: E402

__all__ = [
    "GF", "QQ", "CoefficientField", "Polynomial", "RingDescriptor", "polynomial_ring",
    "BudgetExceeded", "GroebnerBasis", "Ideal", "buchberger", "is_member",
    "krull_dimension", "reduce",
    "StaircaseShape", "detvar_dim_formula", "generic_matrix", "minors_ideal",
    "staircase_dim", "xijm_matrix",
    "MixedSpec", "SquareMatrix", "VarietySpec", "centralizer_basis", "commutator",
    "commuting_ideal", "generic_element", "jordan_nilpotent", "verify_intersections",
    "DimensionReport", "N_value", "decompose_Cijm", "dim_baselines", "dim_Cijm",
    "dim_Cr_zsub", "is_irreducible_Cijm",
    "WeightA2", "decompose_digits", "is_p_regular", "support_variety",
    "count_points", "dimension_slope", "membership",
]
