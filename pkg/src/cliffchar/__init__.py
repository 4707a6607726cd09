"""Exact characteristic polynomials, determinants and inverses in Cl(p,q)."""

from .core import (
    ConjugationSpec,
    Multivector,
    Signature,
    SignatureMismatchError,
    all_signatures,
    blade_grade,
    blade_product,
    clifford_conjugation,
    geometric_product,
    grade_involution,
    identity_spec,
    quad_conjugation,
    random_multivector,
    reversion,
)
from .recursive import (
    CharPoly,
    RecursionTrace,
    SingularElementError,
    adj,
    cayley_hamilton_residual,
    charpoly_recursive,
    charpoly_via_interpolation,
    det,
    inverse,
)
from .closedform import (
    NotInvolutoryError,
    NotRotorError,
    UnsupportedDimensionError,
    charpoly_closed,
    charpoly_closed_tuplesum,
    charpoly_explicit,
    charpoly_involutory,
    charpoly_rotor,
    charpoly_scalar,
    closed_coefficient_multivectors,
    explicit_coefficient_multivectors,
    generator_F,
    is_rotor,
    random_rotor,
)
from .oracle import (
    ComplexMatrix,
    OracleReport,
    Representation,
    RepresentationError,
    beta,
    build_representation,
    matrix_charpoly,
    oracle_compare,
)
from .expr import ExpressionError, format_multivector, format_rational, parse_expression

__version__ = "0.1.0"

__all__ = [
    "CharPoly",
    "ComplexMatrix",
    "ConjugationSpec",
    "ExpressionError",
    "Multivector",
    "NotInvolutoryError",
    "NotRotorError",
    "OracleReport",
    "RecursionTrace",
    "Representation",
    "RepresentationError",
    "Signature",
    "SignatureMismatchError",
    "SingularElementError",
    "UnsupportedDimensionError",
    "adj",
    "all_signatures",
    "beta",
    "blade_grade",
    "blade_product",
    "build_representation",
    "cayley_hamilton_residual",
    "charpoly_closed",
    "charpoly_closed_tuplesum",
    "charpoly_explicit",
    "charpoly_involutory",
    "charpoly_recursive",
    "charpoly_rotor",
    "charpoly_scalar",
    "charpoly_via_interpolation",
    "clifford_conjugation",
    "closed_coefficient_multivectors",
    "det",
    "explicit_coefficient_multivectors",
    "format_multivector",
    "format_rational",
    "generator_F",
    "geometric_product",
    "grade_involution",
    "identity_spec",
    "inverse",
    "is_rotor",
    "matrix_charpoly",
    "oracle_compare",
    "parse_expression",
    "quad_conjugation",
    "random_multivector",
    "random_rotor",
    "reversion",
]
