"""Exact interpolation on finite schemes via residue moment conditions.

Typical use::

    from resinterp import Ring, Subscheme, moment_functionals, interpolation_degree

    R = Ring(("z1", "z2"))
    X = Subscheme.from_points(R, [(0, 0), (1, 0), (0, 1), (1, 1)])
    moment_functionals(X, 1)      # one condition
    interpolation_degree(X)       # 2
"""

from .hermite import (
    InsufficientJetsError,
    JetData,
    NodeList,
    divided_difference,
    hermite_conditions,
    hermite_interpolable,
    newton_interpolant,
)
from .ideal import (
    ColonElement,
    ContainmentError,
    Ideal,
    QuotientBasis,
    SeparatedCI,
    UnfactoredError,
    ZeroDimensionalError,
    colon_basis,
    enclosing_ci,
    groebner_basis,
    ideal_from_functionals,
    ideal_of_points,
    minimal_polynomial,
    normal_form,
    quotient_basis,
)
from .interp import (
    InterpolationReport,
    betti_bound,
    condition_count,
    degree_table,
    find_interpolant,
    has_interpolant,
    interpolation_degree,
    interpolation_report,
    violated_conditions,
)
from .matrix import Matrix, nullspace, rank, row_span_equal, solve
from .oracle import annihilator, evaluation_matrix, is_in_image, jet_system_consistent, verify_theorem
from .parsing import ParseError, parse_point, parse_poly, parse_scalar
from .poly import DegreeError, Poly, Ring, dehomogenize, homogenize, taylor_coefficient
from .residue import (
    MomentFunctional,
    PointFunctional,
    expand_as_points,
    global_residue,
    moment_functionals,
    tensor_ch,
    univariate_residue,
)
from .scalar import I, ONE, ZERO, Scalar
from .scheme import ConversionError, FunctionOnX, Subscheme

__version__ = "0.1.0"

__all__ = [
    "annihilator",
    "betti_bound",
    "colon_basis",
    "ColonElement",
    "condition_count",
    "ContainmentError",
    "ConversionError",
    "degree_table",
    "DegreeError",
    "dehomogenize",
    "divided_difference",
    "enclosing_ci",
    "evaluation_matrix",
    "expand_as_points",
    "find_interpolant",
    "FunctionOnX",
    "global_residue",
    "groebner_basis",
    "has_interpolant",
    "hermite_conditions",
    "hermite_interpolable",
    "homogenize",
    "I",
    "Ideal",
    "ideal_from_functionals",
    "ideal_of_points",
    "InsufficientJetsError",
    "interpolation_degree",
    "interpolation_report",
    "InterpolationReport",
    "is_in_image",
    "jet_system_consistent",
    "JetData",
    "Matrix",
    "minimal_polynomial",
    "moment_functionals",
    "MomentFunctional",
    "newton_interpolant",
    "NodeList",
    "normal_form",
    "nullspace",
    "ONE",
    "parse_point",
    "parse_poly",
    "parse_scalar",
    "ParseError",
    "PointFunctional",
    "Poly",
    "quotient_basis",
    "QuotientBasis",
    "rank",
    "Ring",
    "row_span_equal",
    "Scalar",
    "SeparatedCI",
    "solve",
    "Subscheme",
    "taylor_coefficient",
    "tensor_ch",
    "UnfactoredError",
    "univariate_residue",
    "verify_theorem",
    "violated_conditions",
    "ZERO",
    "ZeroDimensionalError",
]
