"""Exact computer algebra for intrinsic-mirror Landau-Ginzburg models."""

from .fields import GF, QQ, field_from_spec
from .parse import PolynomialSyntaxError, parse_poly
from .poly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    UnknownVariableError,
    VariableRegistry,
    dehomogenize,
    evaluate_point,
    format_poly,
    homogenize,
    partial_derivative,
    substitute,
)

from .ideal import (
    IdealBasis,
    MissingGroebnerError,
    groebner_basis,
    ideal_intersection,
    ideal_quotient,
    jacobian_ideal,
    normal_form,
    sample_smoothness,
    singular_report,
)
from .homology import (
    ChainComplex,
    FreeModuleMap,
    QuotientRingSpec,
    build_odp_resolution,
    build_periodic_resolution,
    check_complex,
    ext_groups,
    matrix_factorization_check,
    truncated_homology,
    truncated_homology_dim,
)
from .mirror import (
    dsg_generators,
    fibre_report,
    hom_sheaves,
    mirror_equation,
    mirror_map,
    pencil_polys,
    theta_eliminate,
    theta_equations,
)
from .monodromy import TwistMatrix, candidate_fixed_check, concrete_triple, fixed_space, symbolic_T3

__version__ = "0.1.0"
