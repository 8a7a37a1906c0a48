"""Exact Okounkov bodies, Zariski decompositions and Seshadri constants
for blow-ups of the projective plane at up to 9 very general points.

Everything is computed in exact arithmetic (arbitrary-precision rationals,
plus real quadratic irrationals for the predicted strips); floats appear
only in emitted figures.
"""

from .bodies import (
    PiecewiseLinearFn,
    beta_profile,
    body_L,
    dissection,
    nagata_strip,
    okounkov_body,
    rescale,
    seshadri_body,
)
from .cones import (
    ConeModel,
    cone_model,
    is_ample,
    is_big,
    is_nef,
    is_pseudoeffective,
    mu_threshold,
    pseudoeffective_certificate,
    seshadri,
)
from .errors import (
    CremonaUndefinedError,
    InfiniteConeError,
    InvariantViolationError,
    NotBigError,
    NotNefError,
    NotPseudoEffectiveError,
    OkbodyError,
    OrbitBoundExceededError,
    SingularSystemError,
    UnboundedThresholdError,
    UnsupportedPipelineError,
)
from .lattice import (
    DivisorClass,
    canonical_class,
    e0,
    exceptional,
    expected_genus,
    intersect,
    self_intersection,
    uniform_class,
)
from .linalg import is_negative_definite, solve_linear
from .polygon import Polygon
from .scalars import QuadraticNumber, Rational, format_rational, parse_rational
from .simplex import cone_exit_threshold, cone_member
from .weyl import (
    OrbitResult,
    Reflection,
    apply,
    cremona_reduce,
    degree_histogram,
    exceptional_classes,
    exceptional_classes_diophantine,
    orbit,
)
from .zariski import ZariskiDecomposition, neg_support, null_set, zariski_decompose

__version__ = "0.1.0"

__all__ = [
    "PiecewiseLinearFn",
    "beta_profile",
    "body_L",
    "dissection",
    "nagata_strip",
    "okounkov_body",
    "rescale",
    "seshadri_body",
    "ConeModel",
    "cone_model",
    "is_ample",
    "is_big",
    "is_nef",
    "is_pseudoeffective",
    "mu_threshold",
    "pseudoeffective_certificate",
    "seshadri",
    "CremonaUndefinedError",
    "InfiniteConeError",
    "InvariantViolationError",
    "NotBigError",
    "NotNefError",
    "NotPseudoEffectiveError",
    "OkbodyError",
    "OrbitBoundExceededError",
    "SingularSystemError",
    "UnboundedThresholdError",
    "UnsupportedPipelineError",
    "DivisorClass",
    "canonical_class",
    "e0",
    "exceptional",
    "expected_genus",
    "intersect",
    "self_intersection",
    "uniform_class",
    "is_negative_definite",
    "solve_linear",
    "Polygon",
    "QuadraticNumber",
    "Rational",
    "format_rational",
    "parse_rational",
    "cone_exit_threshold",
    "cone_member",
    "OrbitResult",
    "Reflection",
    "apply",
    "cremona_reduce",
    "degree_histogram",
    "exceptional_classes",
    "exceptional_classes_diophantine",
    "orbit",
    "ZariskiDecomposition",
    "neg_support",
    "null_set",
    "zariski_decompose",
]
