"""Exact SAGBI bases, toric ideals and planar monoids over the rationals."""

from .algebra import (
    MonomialOrder,
    ParseError,
    Polynomial,
    compare,
    format_poly,
    grevlex,
    grlex,
    initial_term,
    is_homogeneous,
    lex,
    parse,
    substitute,
    support,
)
from .groebner import GroebnerBasis, Ideal, ResourceLimitError, buchberger, divide, reduce_basis, s_polynomial
from .monoid import (
    AffineMonoid,
    Cone2D,
    cone_of,
    construct_module_monoid,
    interior_contains,
    irreducibles,
    is_finitely_generated,
    membership,
    thm34_finite_generators,
    thm34_matrix,
)
from .sagbi import (
    GeneratorSet,
    SagbiReport,
    autoreduce,
    find_initial_representation,
    initial_algebra_monoid,
    sagbi_check,
    sagbi_construct,
    subduct,
)
from .toric import BinomialIdeal, ExponentMatrix, kernel_lattice, toric_ideal

__version__ = "0.1.0"

__all__ = [
    "AffineMonoid",
    "BinomialIdeal",
    "Cone2D",
    "ExponentMatrix",
    "GeneratorSet",
    "GroebnerBasis",
    "Ideal",
    "MonomialOrder",
    "ParseError",
    "Polynomial",
    "ResourceLimitError",
    "SagbiReport",
    "autoreduce",
    "buchberger",
    "compare",
    "cone_of",
    "construct_module_monoid",
    "divide",
    "find_initial_representation",
    "format_poly",
    "grevlex",
    "grlex",
    "initial_algebra_monoid",
    "initial_term",
    "interior_contains",
    "irreducibles",
    "is_finitely_generated",
    "is_homogeneous",
    "kernel_lattice",
    "lex",
    "membership",
    "parse",
    "reduce_basis",
    "s_polynomial",
    "sagbi_check",
    "sagbi_construct",
    "subduct",
    "substitute",
    "support",
    "thm34_finite_generators",
    "thm34_matrix",
    "toric_ideal",
]
