"""Zeros of regular polynomials and power series over the octonions."""
from .errors import (
    HyperzeroError,
    DivisionByZero,
    InvalidClass,
    DivisionByZeroPoly,
    RealityViolation,
    RadiusViolation,
    DegreeZero,
    ConstantPolynomial,
    ClassificationMismatch,
    FtaViolation,
    NoZeroFound,
    DegenerateDenominator,
    ParseError,
)
from .octonion import (
    ConjugacyClass,
    Octonion,
    associator,
    class_of,
    inverse,
    real_class,
    representative,
)
from .poly import OctPoly, conj_poly, linear, normal, star_mul
from .realpoly import RealPoly
from .roots import ClassSpectrum, class_spectrum, complex_roots, quadratic_multiplicity
from .series import TruncatedSeries, reconstruction_error, series_divide_linear, tail_bound_check
from .textio import format_octonion, format_poly, parse_octonion, parse_poly
from .tolerance import DEFAULT, Tolerances
from .zeros import (
    ISOLATED,
    REAL,
    SPHERICAL,
    FtaSummary,
    Remainder,
    ZeroRecord,
    divide_by_class,
    divide_linear,
    factorize,
    remainder_at,
    structure_profile,
    verify_fta,
    zero_set,
)
from .camshaft import predict, product_remainder, verify_products

__version__ = "0.1.0"
