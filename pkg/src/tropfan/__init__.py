"""Exact max-plus polynomial algebra, weighted one-dimensional fans, and
the integer-lattice machinery connecting them.

Everything is exact: coefficients are ``fractions.Fraction``, exponents
and lattice data are Python ints, and all decision procedures
(function equality, smoothness, image membership) return certified
answers rather than floating-point approximations.
"""

from .errors import (
    BadParameters,
    CompositionMismatch,
    DimensionMismatch,
    EmptyPolynomial,
    Inconclusive,
    InvalidMorphism,
    NoIntegerSolution,
    NoMutualFactorization,
    NonBooleanInput,
    NotBalanced,
    NotGeometric,
    NotLeftInvertible,
    NotRealizable,
    ParseError,
    SupportViolation,
    TropfanError,
    ZeroVector,
)
from .semiring import (
    BOOL_ONE,
    NEG_INF,
    TEXT_BOTTOM,
    TExt,
    text,
    text_add,
    text_mul,
    trop_add,
    trop_mul,
    trop_sum,
)
from .intlat import (
    IntMatrix,
    complete_unimodular,
    det,
    hnf,
    invariant_factors,
    lattice_solve,
    snf,
    unimodular_transport,
)
from .laurent import (
    CanonicalFn,
    LaurentPoly,
    canonicalize,
    fn_eq,
    fn_witness,
    germ_eq,
    germ_localize,
    germ_safe_radius,
    parse_point,
    parse_poly_text,
    poly_from_json,
    poly_to_json,
    poly_to_text,
)
from .fan import Ray, WeightedFan, check_balancing, primitive, standard_model, support_contains
from .evalmap import (
    RayFunction,
    SmoothReport,
    degree,
    eval_map,
    generator_matrix,
    image_membership,
    is_realizable,
    is_smooth,
    ker_eq,
    linear_relations,
    reconstruct_fan,
)
from .morphism import (
    FanMorphism,
    HomSpec,
    check_geometric,
    compose,
    induced_homspec,
    pullback_evalmap,
    pullback_poly,
    realize_morphism,
    validate_morphism,
)

__version__ = "0.1.0"

__all__ = [
    "BOOL_ONE",
    "BadParameters",
    "CanonicalFn",
    "CompositionMismatch",
    "DimensionMismatch",
    "EmptyPolynomial",
    "FanMorphism",
    "HomSpec",
    "Inconclusive",
    "IntMatrix",
    "InvalidMorphism",
    "LaurentPoly",
    "NEG_INF",
    "NoIntegerSolution",
    "NoMutualFactorization",
    "NonBooleanInput",
    "NotBalanced",
    "NotGeometric",
    "NotLeftInvertible",
    "NotRealizable",
    "ParseError",
    "Ray",
    "RayFunction",
    "SmoothReport",
    "SupportViolation",
    "TEXT_BOTTOM",
    "TExt",
    "TropfanError",
    "WeightedFan",
    "ZeroVector",
    "canonicalize",
    "check_balancing",
    "check_geometric",
    "complete_unimodular",
    "compose",
    "degree",
    "det",
    "eval_map",
    "fn_eq",
    "fn_witness",
    "generator_matrix",
    "germ_eq",
    "germ_localize",
    "germ_safe_radius",
    "hnf",
    "image_membership",
    "induced_homspec",
    "invariant_factors",
    "is_realizable",
    "is_smooth",
    "ker_eq",
    "lattice_solve",
    "linear_relations",
    "parse_point",
    "parse_poly_text",
    "poly_from_json",
    "poly_to_json",
    "poly_to_text",
    "primitive",
    "pullback_evalmap",
    "pullback_poly",
    "realize_morphism",
    "reconstruct_fan",
    "snf",
    "standard_model",
    "support_contains",
    "text",
    "text_add",
    "text_mul",
    "trop_add",
    "trop_mul",
    "trop_sum",
    "unimodular_transport",
    "validate_morphism",
]
